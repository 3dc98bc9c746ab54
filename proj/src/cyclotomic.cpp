#include "mubsupport/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mubsupport/errors.hpp"

namespace mubsupport {

namespace {

bool is_odd_prime(int n) {
  if (n < 3 || n % 2 == 0) return false;
  for (int f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

long mod(long value, long modulus) {
  const long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// Reduces sum_i cyclic[i] w^i (i < order) modulo the minimal polynomial.
std::vector<BigRational> reduce_cyclic(int order, std::vector<BigRational> cyclic) {
  if (order == 2) return {cyclic[0] - cyclic[1]};
  if (order == 4) return {cyclic[0] - cyclic[2], cyclic[1] - cyclic[3]};
  const BigRational top = cyclic[order - 1];
  cyclic.pop_back();
  if (sgn(top) != 0) {
    for (auto& c : cyclic) c -= top;
  }
  return cyclic;
}

int common_order(int a, int b) {
  if (a == b || b == 0) return a;
  if (a == 0) return b;
  throw DimensionMismatch("cyclotomic orders differ: " + std::to_string(a) + " vs " +
                          std::to_string(b));
}

}  // namespace

std::string format_rational(const BigRational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  BigRational out;
  if (out.set_str(s, 10) != 0) throw ParseError("malformed rational literal '" + s + "'");
  if (sgn(out.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
  out.canonicalize();
  return out;
}

bool is_supported_order(int order) { return order == 2 || order == 4 || is_odd_prime(order); }

int field_degree(int order) {
  if (order == 0) return 1;
  if (order == 2) return 1;
  if (order == 4) return 2;
  if (is_odd_prime(order)) return order - 1;
  throw InvalidDimension("unsupported cyclotomic order " + std::to_string(order));
}

Cyclotomic::Cyclotomic(long value) : coeffs_{BigRational(value)} {}

Cyclotomic::Cyclotomic(BigRational value) : coeffs_{std::move(value)} {}

Cyclotomic::Cyclotomic(int order, std::vector<BigRational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::zero(int order) {
  return Cyclotomic(order, std::vector<BigRational>(field_degree(order)));
}

Cyclotomic Cyclotomic::one(int order) {
  auto c = zero(order);
  c.coeffs_[0] = 1;
  return c;
}

Cyclotomic Cyclotomic::root_power(int order, long exponent) {
  if (order == 0) throw InvalidDimension("root_power needs a concrete order");
  std::vector<BigRational> cyclic(order);
  cyclic[mod(exponent, order)] = 1;
  return Cyclotomic(order, reduce_cyclic(order, std::move(cyclic)));
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<BigRational> coeffs) {
  if (static_cast<int>(coeffs.size()) != field_degree(order)) {
    throw DimensionMismatch("expected " + std::to_string(field_degree(order)) +
                            " coefficients for order " + std::to_string(order));
  }
  for (auto& c : coeffs) c.canonicalize();
  return Cyclotomic(order, std::move(coeffs));
}

Cyclotomic Cyclotomic::from_cyclic(int order, std::vector<BigRational> cyclic) {
  if (static_cast<int>(cyclic.size()) != order) {
    throw DimensionMismatch("cyclic representation must have length " + std::to_string(order));
  }
  return Cyclotomic(order, reduce_cyclic(order, std::move(cyclic)));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

BigRational Cyclotomic::rational_value() const {
  if (!is_rational()) throw DimensionMismatch("element is not rational: " + to_string());
  return coeffs_[0];
}

std::vector<BigRational> Cyclotomic::cyclic() const {
  if (order_ == 0) return coeffs_;
  std::vector<BigRational> out(order_);
  for (int i = 0; i < degree(); ++i) out[i] = coeffs_[i];
  return out;
}

Cyclotomic Cyclotomic::galois(long t) const {
  if (order_ == 0 || order_ == 2) return *this;
  if (std::gcd(t, static_cast<long>(order_)) != 1) {
    throw NoInverse("galois exponent " + std::to_string(t) + " not coprime to order");
  }
  std::vector<BigRational> out(order_);
  for (int i = 0; i < degree(); ++i) {
    if (sgn(coeffs_[i]) != 0) out[mod(t * i, order_)] += coeffs_[i];
  }
  return Cyclotomic(order_, reduce_cyclic(order_, std::move(out)));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::times_root(long exponent) const {
  if (order_ == 0) {
    if (exponent == 0) return *this;
    throw InvalidDimension("times_root on an order-free constant");
  }
  const long shift = mod(exponent, order_);
  if (shift == 0) return *this;
  std::vector<BigRational> out(order_);
  for (int i = 0; i < degree(); ++i) out[(i + shift) % order_] = coeffs_[i];
  return Cyclotomic(order_, reduce_cyclic(order_, std::move(out)));
}

Cyclotomic Cyclotomic::in_order(int order) const {
  if (order == order_) return *this;
  if (order_ != 0) {
    throw DimensionMismatch("cannot move an order-" + std::to_string(order_) +
                            " element to order " + std::to_string(order));
  }
  auto out = zero(order);
  out.coeffs_[0] = coeffs_[0];
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
  if (is_rational()) {
    auto out = *this;
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // a^{-1} = (prod_{t != 1} sigma_t(a)) / N(a), N(a) = prod_t sigma_t(a) in Q.
  Cyclotomic cofactor = one(order_);
  for (long t = 2; t < order_; ++t) {
    if (std::gcd(t, static_cast<long>(order_)) == 1) cofactor *= galois(t);
  }
  const Cyclotomic norm = *this * cofactor;
  if (!norm.is_rational()) {
    throw TheoremViolation("galois norm is not rational for " + to_string());
  }
  const BigRational scale = 1 / norm.coeffs_[0];
  for (auto& c : cofactor.coeffs_) c *= scale;
  return cofactor;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const int order = common_order(order_, rhs.order_);
  if (order_ != order) *this = in_order(order);
  if (rhs.order_ != order) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  for (int i = 0; i < degree(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  const int order = common_order(order_, rhs.order_);
  if (order_ != order) *this = in_order(order);
  if (rhs.order_ != order) {
    coeffs_[0] -= rhs.coeffs_[0];
    return *this;
  }
  for (int i = 0; i < degree(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this = *this / rhs; }

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  const int order = common_order(lhs.order_, rhs.order_);
  if (lhs.is_rational() || rhs.is_rational()) {
    const bool left_scalar = lhs.is_rational();
    const BigRational& scale = left_scalar ? lhs.coeffs_[0] : rhs.coeffs_[0];
    Cyclotomic out = (left_scalar ? rhs : lhs).in_order(order);
    for (auto& c : out.coeffs_) c *= scale;
    return out;
  }
  std::vector<BigRational> cyclic(order);
  BigRational term;
  for (int i = 0; i < lhs.degree(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (int j = 0; j < rhs.degree(); ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      mpq_mul(term.get_mpq_t(), lhs.coeffs_[i].get_mpq_t(), rhs.coeffs_[j].get_mpq_t());
      cyclic[(i + j) % order] += term;
    }
  }
  return Cyclotomic(order, reduce_cyclic(order, std::move(cyclic)));
}

Cyclotomic operator-(const Cyclotomic& value) {
  Cyclotomic out = value;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.order_ == rhs.order_) return lhs.coeffs_ == rhs.coeffs_;
  if (lhs.order_ != 0 && rhs.order_ != 0) return false;
  const Cyclotomic& fixed = lhs.order_ == 0 ? rhs : lhs;
  const Cyclotomic& constant = lhs.order_ == 0 ? lhs : rhs;
  return fixed.is_rational() && fixed.coeffs_[0] == constant.coeffs_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0;
  const int n = order_ == 0 ? 1 : order_;
  for (int i = 0; i < degree(); ++i) {
    const double angle = 2.0 * std::numbers::pi * i / n;
    sum += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < degree(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const BigRational& c = coeffs_[i];
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    const BigRational mag = abs(c);
    if (i == 0) out << mag.get_str();
    else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "w" << (i == 1 ? "" : "^" + std::to_string(i));
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const Cyclotomic& value) {
  return out << value.to_string();
}

CyclicAccumulator::CyclicAccumulator(int order) : order_(order), cyclic_(order) {
  if (!is_supported_order(order)) {
    throw InvalidDimension("unsupported cyclotomic order " + std::to_string(order));
  }
}

void CyclicAccumulator::add_times_root(const Cyclotomic& value, long exponent) {
  const long shift = mod(exponent, order_);
  if (value.order() == 0) {
    cyclic_[shift] += value.coeffs()[0];
    return;
  }
  if (value.order() != order_) throw DimensionMismatch("accumulator order mismatch");
  const auto& c = value.coeffs();
  for (int i = 0; i < value.degree(); ++i) {
    if (sgn(c[i]) != 0) cyclic_[(i + shift) % order_] += c[i];
  }
}

Cyclotomic CyclicAccumulator::result() const { return Cyclotomic::from_cyclic(order_, cyclic_); }

bool CyclicAccumulator::is_zero() const {
  // Zero in Q(w_n) iff the cyclic vector lies in the kernel of the reduction.
  if (order_ == 2) return cyclic_[0] == cyclic_[1];
  if (order_ == 4) return cyclic_[0] == cyclic_[2] && cyclic_[1] == cyclic_[3];
  for (int i = 0; i + 1 < order_; ++i) {
    if (cyclic_[i] != cyclic_[order_ - 1]) return false;
  }
  return true;
}

}  // namespace mubsupport
