#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "mubsupport/analyses.hpp"
#include "mubsupport/errors.hpp"
#include "mubsupport/monomial.hpp"
#include "mubsupport/mub.hpp"
#include "mubsupport/number_theory.hpp"

using namespace mubsupport;

namespace {

const double kPi = std::acos(-1.0);
using CMatrix = std::vector<std::vector<std::complex<double>>>;

std::complex<double> omega(int n, long power) {
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(power) / n);
}

// sqrt(d)-scaled H_j straight from the defining formula, in doubles.
CMatrix hadamard(int d, int j) {
  CMatrix h(d, std::vector<std::complex<double>>(d));
  for (long x = 0; x < d; ++x) {
    for (long k = 0; k < d; ++k) {
      if (d == 2) {
        h[x][k] = omega(4, (j - 1) * x) * (k * x % 2 == 0 ? 1.0 : -1.0);
      } else {
        h[x][k] = omega(d, -k * x + (j - 1) * x * x);
      }
    }
  }
  return h;
}

CMatrix adjoint(const CMatrix& a) {
  const std::size_t n = a.size();
  CMatrix out(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[j][i] = std::conj(a[i][j]);
  }
  return out;
}

CMatrix multiply(const CMatrix& a, const CMatrix& b) {
  const std::size_t n = a.size();
  CMatrix out(n, std::vector<std::complex<double>>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

bool numerically_monomial(const CMatrix& m) {
  const std::size_t n = m.size();
  std::vector<int> per_column(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(m[i][j]) > 1e-6) {
        ++row;
        ++per_column[j];
      }
    }
    if (row != 1) return false;
  }
  for (int c : per_column) {
    if (c != 1) return false;
  }
  return true;
}

const std::vector<int> kPrimes = {2, 3, 5, 7, 11, 13};
const std::vector<int> kOddPrimes = {3, 5, 7, 11, 13};

}  // namespace

TEST_CASE("basis entries match the defining formula") {
  for (int d : kPrimes) {
    const MubSet mubs = build_mub_set(d);
    CHECK(mubs.size() == d + 1);
    for (int j = 1; j <= d; ++j) {
      const auto expected = hadamard(d, j);
      const CycMatrix h = mubs.basis(j).matrix();
      for (int x = 0; x < d; ++x) {
        for (int k = 0; k < d; ++k) CHECK(std::abs(h(x, k).to_complex() - expected[x][k]) < 1e-9);
      }
    }
    const CycMatrix id = mubs.basis(0).matrix();
    for (int x = 0; x < d; ++x) {
      for (int k = 0; k < d; ++k) CHECK(id(x, k) == (x == k ? Cyclotomic::one(mubs.order()) : Cyclotomic::zero(mubs.order())));
    }
  }
}

TEST_CASE("small examples") {
  const MubSet m3 = build_mub_set(3);
  const auto col = m3.column(1, 1);
  CHECK(col.entries(0) == Cyclotomic::one(3));
  CHECK(col.entries(1) == Cyclotomic::root_power(3, 2));
  CHECK(col.entries(2) == Cyclotomic::root_power(3, 1));

  const MubSet m5 = build_mub_set(5);
  const auto quad = m5.column(2, 0);
  for (int x = 0; x < 5; ++x) CHECK(quad.entries(x) == Cyclotomic::root_power(5, x * x));

  const MubSet m2 = build_mub_set(2);
  CHECK(m2.order() == 4);
  CHECK(m2.column(2, 0).entries(1) == Cyclotomic::root_power(4, 1));
  CHECK(m2.column(2, 1).entries(1) == Cyclotomic::root_power(4, 3));

  CHECK_THROWS_AS(build_mub_set(4), InvalidDimension);
  CHECK_THROWS_AS(build_mub_set(1), InvalidDimension);
}

TEST_CASE("scaled bases are orthogonal and mutually unbiased") {
  for (int d : {2, 3, 5, 7, 11}) {
    const MubSet mubs = build_mub_set(d);
    const Cyclotomic dd = Cyclotomic(d).in_order(mubs.order());
    for (int j = 0; j <= d; ++j) {
      for (int k = 0; k < d; ++k) {
        const auto a = mubs.column(j, k);
        for (int jp = j; jp <= d; ++jp) {
          for (int kp = 0; kp < d; ++kp) {
            const auto z = inner_product(a, mubs.column(jp, kp));
            if (jp == j) {
              const Cyclotomic norm = (j == 0) ? Cyclotomic::one(mubs.order()) : dd;
              CHECK(z == (k == kp ? norm : Cyclotomic::zero(mubs.order())));
            } else if (j == 0) {
              CHECK(z * z.conj() == Cyclotomic::one(mubs.order()));
            } else {
              CHECK(z * z.conj() == dd);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("unitarity and unbiasedness checks up to 13") {
  for (int d : kPrimes) {
    const MubSet mubs = build_mub_set(d);
    CHECK(check_unitarity(mubs).passed);
    CHECK(check_unbiasedness(mubs).passed);
  }
}

TEST_CASE("clock and shift operators") {
  const auto w = [](int e) { return Cyclotomic::root_power(3, e); };
  const auto psi = make_state(3, {Cyclotomic::one(3), Cyclotomic::one(3), Cyclotomic::one(3)});
  const auto shifted = apply_B(psi, 1);
  CHECK(shifted.entries(1) == w(-1));
  CHECK(shifted.entries(2) == w(-2));
  const auto back = apply_B(psi, 3);
  for (int x = 0; x < 3; ++x) CHECK(back.entries(x) == psi.entries(x));

  auto two = make_state(5, {0, 1, 1, 0, 0});
  const auto clocked = apply_D(two, 1);
  CHECK(clocked.entries(1) == Cyclotomic::root_power(5, 1));
  CHECK(clocked.entries(2) == Cyclotomic::root_power(5, 4));
  CHECK(apply_D(two, 5).entries(2) == two.entries(2).in_order(5));

  const auto q = apply_D(make_state(2, {1, 1}), 1);
  CHECK(q.entries(1) == Cyclotomic::root_power(4, 1));
}

TEST_CASE("H_j = D^(j-1) H_1 and B shifts columns") {
  for (int d : kPrimes) {
    const MubSet mubs = build_mub_set(d);
    CHECK(check_generation_identity(mubs).passed);
    for (int j = 1; j <= d; ++j) {
      for (int k = 0; k < d; ++k) {
        const auto generated = apply_D(mubs.column(1, k), j - 1);
        CHECK(same_ray(generated, mubs.column(j, k)));
        const auto moved = apply_B(mubs.column(j, k), 1);
        CHECK(same_ray(moved, mubs.column(j, (k + 1) % d)));
      }
    }
  }
}

TEST_CASE("monomial decomposition for every j != k up to 13") {
  for (int d : kOddPrimes) {
    const MubSet mubs = build_mub_set(d);
    const std::complex<double> scale = static_cast<double>(d);
    for (int j = 1; j <= d; ++j) {
      for (int k = 1; k <= d; ++k) {
        if (j == k) continue;
        const auto m = monomial_decompose(mubs, j, k);
        const long chi = mod_inverse(mod_floor(4L * (j - k), d), d);
        CHECK(m.chi == chi);
        CHECK(m.t == 1 + chi);
        CHECK(m.jacobi == jacobi_symbol(j - k, d));

        const CMatrix v = multiply(multiply(adjoint(hadamard(d, k)), hadamard(d, j)), hadamard(d, m.t));
        CHECK(numerically_monomial(v));
        for (int l = 0; l < d; ++l) {
          const int col = static_cast<int>(mod_floor(2L * l * chi, d));
          CHECK(m.permutation[l] == col);
          CHECK(std::abs(std::abs(v[l][col]) - d * std::sqrt(static_cast<double>(d))) < 1e-6);
          CHECK(std::abs(v[l][col] - scale * m.phases[l].to_complex()) < 1e-6);
        }

        int monomial_labels = 0;
        for (int t = 1; t <= d; ++t) {
          const CMatrix w = multiply(multiply(adjoint(hadamard(d, k)), hadamard(d, j)), hadamard(d, t));
          if (numerically_monomial(w)) ++monomial_labels;
        }
        CHECK(monomial_labels == 1);
      }
    }
  }
}

TEST_CASE("exact uniqueness of t up to 7") {
  for (int d : {3, 5, 7}) {
    const MubSet mubs = build_mub_set(d);
    CHECK(check_monomial_all(mubs, true).passed);
    for (int t = 1; t <= d; ++t) {
      if (t == monomial_decompose(mubs, 2, 1).t) continue;
      CHECK(monomial_negative_check(mubs, 2, 1, t));
    }
  }
  CHECK_THROWS_AS(monomial_decompose(3, 3, 5), InvalidDimension);
}

TEST_CASE("qubit relations") {
  const auto rel = qubit_monomial_relations();
  CHECK(rel.m_is_monomial);
  CHECK(rel.m_prime_is_monomial);
  const CMatrix m = multiply(multiply(adjoint(hadamard(2, 1)), hadamard(2, 2)), hadamard(2, 2));
  const CMatrix mp = multiply(multiply(adjoint(hadamard(2, 2)), hadamard(2, 1)), hadamard(2, 2));
  CHECK(numerically_monomial(m));
  CHECK(numerically_monomial(mp));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(rel.m(i, j).to_complex() - m[i][j]) < 1e-9);
      CHECK(std::abs(rel.m_prime(i, j).to_complex() - mp[i][j]) < 1e-9);
    }
  }
}

TEST_CASE("root frequency in Hadamard columns") {
  for (int d : kOddPrimes) {
    CHECK(check_root_frequency(build_mub_set(d)).passed);
    for (long j = 1; j <= d; ++j) {
      for (long k = 0; k < d; ++k) {
        std::vector<int> count(d, 0);
        for (long x = 0; x < d; ++x) ++count[mod_floor(-k * x + (j - 1) * x * x, d)];
        for (int c : count) {
          if (j == 1 && k == 0) {
            CHECK((c == 0 || c == d));
          } else if (j == 1) {
            CHECK(c == 1);
          } else {
            CHECK(c <= 2);
          }
        }
      }
    }
  }
}

TEST_CASE("identical entries across Hadamard bases") {
  for (int d : {3, 5, 7, 11}) {
    CHECK(check_identical_entries(build_mub_set(d)).passed);
  }
  for (long d : {3L, 5L, 7L}) {
    int worst = 0;
    for (long j = 1; j <= d; ++j) {
      for (long jp = j + 1; jp <= d; ++jp) {
        for (long k = 0; k < d; ++k) {
          for (long kp = 0; kp < d; ++kp) {
            for (long n = 0; n < d; ++n) {
              int agree = 0;
              for (long x = 0; x < d; ++x) {
                const long lhs = -k * x + (j - 1) * x * x;
                const long rhs = n - kp * x + (jp - 1) * x * x;
                if (mod_floor(lhs - rhs, d) == 0) ++agree;
              }
              worst = std::max(worst, agree);
            }
          }
        }
      }
    }
    CHECK(worst == 2);
  }
}
