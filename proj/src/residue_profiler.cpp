#include "mubsupport/residue_profiler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mubsupport/errors.hpp"
#include "mubsupport/number_theory.hpp"

namespace mubsupport {

namespace {

std::vector<int> conjugate_exponent_table(const MubSet& mubs) {
  const int d = mubs.dim();
  std::vector<int> out(static_cast<std::size_t>(d + 1) * d * d, 0);
  for (int j = 1; j <= d; ++j) {
    for (int k = 0; k < d; ++k) {
      for (int x = 0; x < d; ++x) {
        out[(static_cast<std::size_t>(j) * d + k) * d + x] =
            static_cast<int>(mod_floor(-mubs.basis(j).exponent(x, k), mubs.order()));
      }
    }
  }
  return out;
}

bool contains(const std::vector<BasisIndex>& rows, int j, int k) {
  return std::any_of(rows.begin(), rows.end(),
                     [j, k](const BasisIndex& r) { return r.basis == j && r.index == k; });
}

}  // namespace

std::vector<int> RayZeros::sizes(int dim) const {
  std::vector<int> out;
  out.reserve(zeros.size());
  for (const auto& z : zeros) out.push_back(dim - static_cast<int>(z.size()));
  return out;
}

ResidueProfiler::ResidueProfiler(const MubSet& mubs)
    : dim_(mubs.dim()),
      order_(mubs.order()),
      field_(ResidueField::with_roots_of_order(mubs.order())),
      conj_exponents_(conjugate_exponent_table(mubs)) {
  // coefficient bound d! must stay below q
  if (dim_ > 19) throw InvalidDimension("residue engine supports d <= 19");
  for (std::uint64_t root : field_.primitive_roots(order_)) {
    std::vector<std::uint64_t> pw(order_);
    pw[0] = 1;
    for (int m = 1; m < order_; ++m) pw[m] = field_.mul(pw[m - 1], root);
    powers_.push_back(std::move(pw));
  }
}

std::uint64_t ResidueProfiler::entry(int embedding, const BasisIndex& row, int x) const {
  if (row.basis == 0) return x == row.index ? 1 : 0;
  return powers_[embedding][conj_exponents_[(static_cast<std::size_t>(row.basis) * dim_ + row.index) * dim_ + x]];
}

int ResidueProfiler::solve(int embedding, const std::vector<BasisIndex>& rows,
                           std::vector<std::uint64_t>& kernel) const {
  const int m = static_cast<int>(rows.size());
  const int d = dim_;
  std::vector<std::uint64_t> a(static_cast<std::size_t>(m) * d);
  for (int r = 0; r < m; ++r) {
    for (int x = 0; x < d; ++x) a[r * d + x] = entry(embedding, rows[r], x);
  }
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < d && rank < m; ++c) {
    int p = rank;
    while (p < m && a[p * d + c] == 0) ++p;
    if (p == m) continue;
    if (p != rank) {
      for (int x = 0; x < d; ++x) std::swap(a[p * d + x], a[rank * d + x]);
    }
    const std::uint64_t inv = field_.inv(a[rank * d + c]);
    for (int x = c; x < d; ++x) a[rank * d + x] = field_.mul(a[rank * d + x], inv);
    for (int r = 0; r < m; ++r) {
      if (r == rank || a[r * d + c] == 0) continue;
      const std::uint64_t f = a[r * d + c];
      for (int x = c; x < d; ++x) {
        a[r * d + x] = field_.sub(a[r * d + x], field_.mul(f, a[rank * d + x]));
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  if (rank == d - 1) {
    int free_column = d - 1;
    for (int i = 0; i < rank; ++i) {
      if (pivots[i] != i) {
        free_column = i;
        break;
      }
    }
    kernel.assign(d, 0);
    kernel[free_column] = 1;
    for (int i = 0; i < rank; ++i) kernel[pivots[i]] = field_.neg(a[i * d + free_column]);
  }
  return rank;
}

std::uint64_t ResidueProfiler::coefficient(int embedding, int j, int k,
                                           const std::vector<std::uint64_t>& v) const {
  if (j == 0) return v[k];
  const auto& pw = powers_[embedding];
  const int* exps = &conj_exponents_[(static_cast<std::size_t>(j) * dim_ + k) * dim_];
  unsigned __int128 acc = 0;
  const std::uint64_t q = field_.modulus();
  // q < 2^61 so sixteen products fit in 128 bits before reduction
  for (int x = 0; x < dim_; ++x) {
    acc += static_cast<unsigned __int128>(pw[exps[x]]) * v[x];
    if ((x & 15) == 15) acc %= q;
  }
  return static_cast<std::uint64_t>(acc % q);
}

RayZeros ResidueProfiler::ray(const std::vector<BasisIndex>& rows) const {
  if (static_cast<int>(rows.size()) != dim_ - 1) throw DimensionMismatch("ray needs exactly d - 1 rows");
  RayZeros out;
  const int n = embeddings();
  std::vector<std::vector<std::uint64_t>> kernels(n);
  // 1: rank d-1, 0: rank lower, -1: not evaluated yet
  std::vector<int> full_rank(n, -1);
  auto evaluate = [&](int e) {
    if (full_rank[e] < 0) {
      full_rank[e] = solve(e, rows, kernels[e]) == dim_ - 1 ? 1 : 0;
      ++out.embeddings_used;
    }
    return full_rank[e] == 1;
  };

  int primary = -1;
  for (int e = 0; e < n && primary < 0; ++e) {
    if (evaluate(e)) primary = e;
  }
  if (primary < 0) return out;
  out.unique = true;

  out.zeros.assign(dim_ + 1, {});
  for (int j = 0; j <= dim_; ++j) {
    for (int k = 0; k < dim_; ++k) {
      if (coefficient(primary, j, k, kernels[primary]) != 0) continue;
      bool zero = true;
      if (!contains(rows, j, k)) {
        for (int e = 0; e < n && zero; ++e) {
          if (e == primary || !evaluate(e)) continue;
          zero = coefficient(e, j, k, kernels[e]) == 0;
        }
      }
      if (zero) out.zeros[j].push_back(k);
    }
  }
  return out;
}

bool ResidueProfiler::is_singular(const std::vector<BasisIndex>& rows) const {
  if (static_cast<int>(rows.size()) != dim_) throw DimensionMismatch("singularity test needs d rows");
  std::vector<std::uint64_t> unused;
  for (int e = 0; e < embeddings(); ++e) {
    if (solve(e, rows, unused) == dim_) return false;
  }
  return true;
}

FloatProfiler::FloatProfiler(const MubSet& mubs)
    : dim_(mubs.dim()), conj_exponents_(conjugate_exponent_table(mubs)), order_(mubs.order()) {
  for (int m = 0; m < order_; ++m) {
    roots_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * m / order_));
  }
}

std::optional<std::vector<std::vector<int>>> FloatProfiler::ray(const std::vector<BasisIndex>& rows) const {
  using C = std::complex<double>;
  const int d = dim_;
  const int m = static_cast<int>(rows.size());
  if (m != d - 1) throw DimensionMismatch("ray needs exactly d - 1 rows");
  std::vector<C> a(static_cast<std::size_t>(m) * d);
  for (int r = 0; r < m; ++r) {
    for (int x = 0; x < d; ++x) {
      const auto& row = rows[r];
      a[r * d + x] = row.basis == 0
                         ? C(x == row.index ? 1.0 : 0.0)
                         : roots_[conj_exponents_[(static_cast<std::size_t>(row.basis) * d + row.index) * d + x]];
    }
  }
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < d && rank < m; ++c) {
    int p = rank;
    for (int r = rank + 1; r < m; ++r) {
      if (std::abs(a[r * d + c]) > std::abs(a[p * d + c])) p = r;
    }
    if (std::abs(a[p * d + c]) < 1e-9) continue;
    if (p != rank) {
      for (int x = 0; x < d; ++x) std::swap(a[p * d + x], a[rank * d + x]);
    }
    const C inv = 1.0 / a[rank * d + c];
    for (int x = c; x < d; ++x) a[rank * d + x] *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == rank) continue;
      const C f = a[r * d + c];
      if (f == C(0.0)) continue;
      for (int x = c; x < d; ++x) a[r * d + x] -= f * a[rank * d + x];
    }
    pivots.push_back(c);
    ++rank;
  }
  if (rank != d - 1) return std::nullopt;
  int free_column = d - 1;
  for (int i = 0; i < rank; ++i) {
    if (pivots[i] != i) {
      free_column = i;
      break;
    }
  }
  std::vector<C> v(d, C(0.0));
  v[free_column] = 1.0;
  for (int i = 0; i < rank; ++i) v[pivots[i]] = -a[i * d + free_column];

  std::vector<std::vector<double>> magnitude(d + 1, std::vector<double>(d));
  double largest = 0.0;
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k < d; ++k) {
      C c(0.0);
      if (j == 0) {
        c = v[k];
      } else {
        const int* exps = &conj_exponents_[(static_cast<std::size_t>(j) * d + k) * d];
        for (int x = 0; x < d; ++x) c += roots_[exps[x]] * v[x];
      }
      magnitude[j][k] = std::abs(c);
      largest = std::max(largest, magnitude[j][k]);
    }
  }
  std::vector<std::vector<int>> zeros(d + 1);
  for (const auto& row : rows) zeros[row.basis].push_back(row.index);
  for (int j = 0; j <= d; ++j) {
    for (int k = 0; k < d; ++k) {
      if (contains(rows, j, k)) continue;
      if (magnitude[j][k] < kRelativeThreshold * largest) return std::nullopt;
    }
    std::sort(zeros[j].begin(), zeros[j].end());
  }
  return zeros;
}

}  // namespace mubsupport
