#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

#include "mubsupport/cyclotomic.hpp"
#include "mubsupport/errors.hpp"
#include "mubsupport/exact_linalg.hpp"
#include "mubsupport/number_theory.hpp"
#include "mubsupport/residue_field.hpp"

using namespace mubsupport;

namespace {

const double kPi = std::acos(-1.0);

std::complex<double> omega(int n, long power) {
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(power) / n);
}

Cyclotomic random_element(int order, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<BigRational> coeffs(field_degree(order));
  for (auto& c : coeffs) {
    c = BigRational(num(rng), den(rng));
    c.canonicalize();
  }
  return Cyclotomic::from_coeffs(order, coeffs);
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

// Brute-force Legendre symbol by listing squares.
int legendre_by_squares(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  for (long x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

const std::vector<int> kOrders = {2, 3, 4, 5, 7, 11, 13};
const std::vector<int> kOddPrimes = {3, 5, 7, 11, 13};

}  // namespace

TEST_CASE("roots of unity reduce in the power basis") {
  const auto w = Cyclotomic::root_power(3, 1);
  CHECK(w + w * w == Cyclotomic(-1).in_order(3));
  CHECK(w * w * w == Cyclotomic::one(3));
  CHECK(Cyclotomic::root_power(5, 4) == Cyclotomic::root_power(5, -1));
  CHECK(Cyclotomic::root_power(5, 1).conj() == Cyclotomic::root_power(5, 4));

  const auto w4 = Cyclotomic::root_power(5, 4);
  REQUIRE(w4.degree() == 4);
  for (const auto& c : w4.coeffs()) CHECK(c == -1);

  const auto i = Cyclotomic::root_power(4, 1);
  CHECK(i * i == Cyclotomic(-1).in_order(4));
  CHECK(i.conj() == -i);
}

TEST_CASE("inverse of 1 + w") {
  for (int d : kOddPrimes) {
    const auto a = Cyclotomic::one(d) + Cyclotomic::root_power(d, 1);
    const auto inv = a.inverse();
    CHECK(a * inv == Cyclotomic::one(d));
    CHECK(close(inv.to_complex(), 1.0 / (1.0 + omega(d, 1))));
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int n : kOrders) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(n, rng);
      const auto b = random_element(n, rng);
      const auto c = random_element(n, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == Cyclotomic::zero(n));
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      const auto norm = a * a.conj();
      CHECK(norm.conj() == norm);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Cyclotomic::one(n));
        CHECK((b / a) * a == b);
      }
      // Complex evaluation is a ring homomorphism.
      CHECK(close((a * b + c).to_complex(), a.to_complex() * b.to_complex() + c.to_complex(), 1e-6));
      CHECK(close(a.conj().to_complex(), std::conj(a.to_complex()), 1e-9));
    }
  }
}

TEST_CASE("times_root agrees with multiplication") {
  std::mt19937_64 rng(11);
  for (int n : kOrders) {
    const auto a = random_element(n, rng);
    for (long e = -2 * n; e <= 2 * n; ++e) {
      CHECK(a.times_root(e) == a * Cyclotomic::root_power(n, e));
    }
  }
}

TEST_CASE("rational constants promote on contact") {
  const Cyclotomic two(2);
  CHECK(two.order() == 0);
  const auto sum = two + Cyclotomic::root_power(7, 2);
  CHECK(sum.order() == 7);
  CHECK(close(sum.to_complex(), 2.0 + omega(7, 2)));
  CHECK((Cyclotomic(0) * Cyclotomic::root_power(5, 1)).is_zero());
}

TEST_CASE("field errors") {
  CHECK_THROWS_AS(Cyclotomic::root_power(3, 1) + Cyclotomic::root_power(5, 1), DimensionMismatch);
  CHECK_THROWS_AS(Cyclotomic::zero(5).inverse(), DivisionByZero);
  CHECK_THROWS_AS(mod_inverse(10, 5), NoInverse);
  CHECK_THROWS_AS(jacobi_symbol(3, 4), InvalidModulus);
  CHECK_THROWS_AS(gauss_sum(5, 5, 1), DegenerateSum);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(require_prime(9), InvalidDimension);
}

TEST_CASE("rational text round trip") {
  CHECK(format_rational(BigRational(3)) == "3/1");
  CHECK(format_rational(parse_rational("-4/6")) == "-2/3");
  CHECK(parse_rational("7") == 7);
}

TEST_CASE("modular inverse and Jacobi symbol") {
  CHECK(mod_inverse(4, 5) == 4);
  CHECK(mod_inverse(4 * 3, 7) == 3);
  CHECK(mod_inverse(-1, 7) == 6);
  for (int d : kOddPrimes) {
    for (long a = 1; a < d; ++a) CHECK(mod_inverse(a, d) * a % d == 1);
    for (long a = -2 * d; a <= 2 * d; ++a) CHECK(jacobi_symbol(a, d) == legendre_by_squares(a, d));
  }
  CHECK(jacobi_symbol(2, 15) == 1);
  CHECK(jacobi_symbol(7, 15) == -1);
}

TEST_CASE("Gauss sums match the direct complex sum and the closed form") {
  for (int d : kOddPrimes) {
    for (long a = 1; a < d; ++a) {
      for (long l = 0; l < d; ++l) {
        std::complex<double> direct = 0;
        for (long x = 0; x < d; ++x) direct += omega(d, a * x * x + l * x);
        const auto exact = gauss_sum(d, a, l);
        CHECK(close(exact.to_complex(), direct, 1e-8));
        CHECK(exact == gauss_sum_closed_form(d, a, l));
      }
    }
  }
}

TEST_CASE("g squared is (-1)^((d-1)/2) d and g = eps sqrt(d)") {
  for (int d : kOddPrimes) {
    const auto g = quadratic_gauss_element(d);
    CHECK(g.value * g.value == Cyclotomic(g.square()).in_order(d));
    const std::complex<double> eps = d % 4 == 1 ? std::complex<double>(1, 0) : std::complex<double>(0, 1);
    CHECK(close(g.value.to_complex(), eps * std::sqrt(static_cast<double>(d)), 1e-9));
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(19, 9) == 92378);
  CHECK(binomial(4, 5) == 0);
}

TEST_CASE("residue field roots") {
  for (int n : {3, 4, 5, 7, 11, 13, 17, 19}) {
    const auto f = ResidueField::with_roots_of_order(n);
    CHECK(f.modulus() % n == 1);
    CHECK(f.modulus() < (std::uint64_t{1} << 61));
    CHECK(is_prime_u64(f.modulus()));
    const auto roots = f.primitive_roots(n);
    CHECK(static_cast<int>(roots.size()) == field_degree(n));
    for (auto r : roots) {
      CHECK(f.pow(r, n) == 1);
      CHECK(r != 1);
      CHECK(f.mul(r, f.inv(r)) == 1);
    }
  }
}

TEST_CASE("fraction-free elimination over the rationals") {
  Matrix<BigRational> hilbert(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) hilbert(i, j) = BigRational(1, i + j + 1);
  }
  CHECK(determinant(hilbert) == BigRational(1, 2160));

  Matrix<BigRational> m(2, 3);
  m << 1, 2, 3, 2, 4, 6;
  CHECK(exact_rank(m) == 1);
  const auto kernel = nullspace(m);
  REQUIRE(kernel.cols() == 2);
  const Matrix<BigRational> product = exact_product(m, kernel);
  for (Eigen::Index i = 0; i < product.size(); ++i) CHECK(product(i) == 0);
}

TEST_CASE("cyclotomic determinant of the Fourier matrix") {
  // det(F)^2 = (-1)^{(d-1)/2} d^d up to sign conventions; compare magnitudes.
  for (int d : {3, 5}) {
    CycMatrix f(d, d);
    for (int x = 0; x < d; ++x) {
      for (int k = 0; k < d; ++k) f(x, k) = Cyclotomic::root_power(d, -static_cast<long>(x) * k);
    }
    const auto det = determinant(f);
    CHECK(std::abs(std::abs(det.to_complex()) - std::pow(d, d / 2.0)) < 1e-6);
  }
}
