#include "mubsupport/support.hpp"

#include <algorithm>
#include <string>

#include "mubsupport/errors.hpp"
#include "mubsupport/number_theory.hpp"

namespace mubsupport {

int support_size(const StateVector& psi, const MubBasis& basis) {
  if (psi.is_zero()) throw DegenerateState("support of the zero vector");
  int count = 0;
  for (int k = 0; k < basis.dim(); ++k) {
    if (!basis.coefficient(k, psi).is_zero()) ++count;
  }
  return count;
}

SupportProfile make_profile(int dim, std::vector<int> sizes) {
  SupportProfile out{dim, std::move(sizes), 0};
  for (int s : out.sizes) out.total += s;
  return out;
}

SupportProfile support_profile(const StateVector& psi, const MubSet& mubs) {
  if (psi.dim != mubs.dim()) throw DimensionMismatch("state and basis set dimensions differ");
  std::vector<int> sizes;
  sizes.reserve(mubs.size());
  for (const auto& basis : mubs.bases()) sizes.push_back(support_size(psi, basis));
  return make_profile(mubs.dim(), std::move(sizes));
}

PairCheck check_pair_inequality(const SupportProfile& profile, int j, int k) {
  if (j == k) throw InvalidDimension("pair inequality needs two distinct bases");
  const int d = profile.dim;
  PairCheck out;
  out.j = j;
  out.k = k;
  out.sum = profile.sizes.at(j) + profile.sizes.at(k);
  out.sum_slack = out.sum - (d + 1);
  out.sum_ok = out.sum_slack >= 0;
  out.product = profile.sizes.at(j) * profile.sizes.at(k);
  out.product_slack = out.product - d;
  out.product_ok = out.product_slack >= 0;
  return out;
}

std::vector<PairCheck> check_all_pairs(const SupportProfile& profile) {
  std::vector<PairCheck> out;
  const int n = static_cast<int>(profile.sizes.size());
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) out.push_back(check_pair_inequality(profile, j, k));
  }
  return out;
}

const char* to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::satisfied: return "satisfied";
    case BoundStatus::saturated: return "saturated";
    case BoundStatus::violated: return "violated";
  }
  return "?";
}

BigRational complete_bound(int d) {
  BigRational t((d + 1) * (d + 1), 2);
  t.canonicalize();
  return t;
}

BoundStatus check_complete_bound(const SupportProfile& profile) {
  const BigRational total(profile.total);
  const BigRational t = complete_bound(profile.dim);
  if (total < t) return BoundStatus::violated;
  if (total == t) return BoundStatus::saturated;
  return BoundStatus::satisfied;
}

bool check_triple_bound(const SupportProfile& profile, int a, int b, int c) {
  const int sum = profile.sizes.at(a) + profile.sizes.at(b) + profile.sizes.at(c);
  return 2 * sum >= 3 * (profile.dim + 1);
}

ZeroDistribution zero_distribution(const StateVector& psi, int j, const MubSet& mubs) {
  if (psi.is_zero()) throw DegenerateState("zero distribution of the zero vector");
  ZeroDistribution out{mubs.dim(), j, {}};
  const MubBasis& basis = mubs.basis(j);
  for (int k = 0; k < mubs.dim(); ++k) {
    if (basis.coefficient(k, psi).is_zero()) out.indices.push_back(k);
  }
  return out;
}

std::vector<int> shift_set(const std::vector<int>& set, int mu, int d) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int v : set) out.push_back(static_cast<int>(mod_floor(v + mu, d)));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> cyclic_shift_between(const std::vector<int>& a, const std::vector<int>& b, int d) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> target = b;
  std::sort(target.begin(), target.end());
  for (int mu = 0; mu < d; ++mu) {
    if (shift_set(a, mu, d) == target) return mu;
  }
  return std::nullopt;
}

std::optional<int> compatible(const ZeroDistribution& z, const ZeroDistribution& z_prime) {
  if (z.dim != z_prime.dim) throw DimensionMismatch("zero distributions of different dims");
  return cyclic_shift_between(z.indices, z_prime.indices, z.dim);
}

std::pair<std::vector<int>, int> canonical_shift(const std::vector<int>& set, int d) {
  std::vector<int> best = shift_set(set, 0, d);
  int best_mu = 0;
  for (int mu = 1; mu < d; ++mu) {
    auto candidate = shift_set(set, mu, d);
    if (candidate < best) {
      best = std::move(candidate);
      best_mu = mu;
    }
  }
  return {best, best_mu};
}

std::vector<std::vector<int>> all_subsets(int d, int n) {
  std::vector<std::vector<int>> out;
  if (n < 0 || n > d) return out;
  std::vector<int> current(n);
  for (int i = 0; i < n; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    int i = n - 1;
    while (i >= 0 && current[i] == d - n + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int m = i + 1; m < n; ++m) current[m] = current[m - 1] + 1;
  }
  return out;
}

std::vector<std::vector<int>> canonical_class_representatives(int d, int n) {
  require_prime(d);
  if (n <= 0 || n >= d) {
    throw TrivialClass("n = " + std::to_string(n) + " gives a single fixed class");
  }
  std::vector<std::vector<int>> out;
  for (auto& set : all_subsets(d, n)) {
    if (canonical_shift(set, d).first == set) out.push_back(std::move(set));
  }
  return out;
}

bool equal_support_condition(const SupportProfile& profile) {
  const int half = (profile.dim + 1) / 2;
  return std::all_of(profile.sizes.begin(), profile.sizes.end(),
                     [half](int s) { return s == half; });
}

const char* to_string(Achievable value) {
  switch (value) {
    case Achievable::yes: return "yes";
    case Achievable::no: return "no";
    case Achievable::unknown: return "unknown";
  }
  return "?";
}

}  // namespace mubsupport
