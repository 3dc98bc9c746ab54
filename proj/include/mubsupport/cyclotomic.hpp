#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

namespace mubsupport {

using BigInteger = mpz_class;
using BigRational = mpq_class;

/// Formats as "num/den" (the denominator is always printed, "3/1").
std::string format_rational(const BigRational& value);

/// Accepts "num/den" or a bare integer; the result is canonicalized.
BigRational parse_rational(std::string_view text);

/// True for the root-of-unity orders a Cyclotomic can live in: 2, 4 and odd
/// primes. Order 0 (a bare rational constant) is handled separately.
bool is_supported_order(int order);

/// Power-basis length phi(n) of Q(w_n); 1 for order 0.
int field_degree(int order);

/// Exact element of the cyclotomic field Q(w_n), w_n = exp(2 pi i / n).
///
/// Stored in the power basis {1, w, ..., w^{deg-1}} of the minimal polynomial,
/// always fully reduced, so equality and zero tests are coefficient compares.
/// For odd prime n the reduction is w^{n-1} = -(1 + w + ... + w^{n-2}); for
/// n = 4 it is w^2 = -1; for n = 2 the field is Q with w = -1.
///
/// Order 0 marks a rational constant that is not yet tied to a field. It is
/// promoted on the first operation with an element of a concrete order, which
/// lets Eigen construct `Scalar(0)` and `Scalar(1)` freely.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor): Eigen literals
  explicit Cyclotomic(BigRational value);

  static Cyclotomic zero(int order);
  static Cyclotomic one(int order);
  /// w^exponent; any integer exponent, reduced mod the order.
  static Cyclotomic root_power(int order, long exponent);
  static Cyclotomic from_coeffs(int order, std::vector<BigRational> coeffs);
  /// Builds sum_i cyclic[i] w^i from a length-`order` array and reduces it.
  static Cyclotomic from_cyclic(int order, std::vector<BigRational> cyclic);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws DimensionMismatch unless is_rational().
  BigRational rational_value() const;

  /// Complex conjugation, w^k -> w^{-k}.
  Cyclotomic conj() const;
  /// Galois automorphism w -> w^t, t coprime to the order.
  Cyclotomic galois(long t) const;
  /// Throws DivisionByZero for zero.
  Cyclotomic inverse() const;
  /// this * w^exponent, done as an index rotation (no multiplications).
  Cyclotomic times_root(long exponent) const;
  /// Same value viewed in Q(w_order); only order-0 constants can be moved.
  Cyclotomic in_order(int order) const;
  /// Length-`order` representation with a zero top coefficient for primes.
  std::vector<BigRational> cyclic() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend Cyclotomic operator/(const Cyclotomic& lhs, const Cyclotomic& rhs) {
    return lhs * rhs.inverse();
  }
  friend Cyclotomic operator-(const Cyclotomic& value);
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend bool operator!=(const Cyclotomic& lhs, const Cyclotomic& rhs) { return !(lhs == rhs); }

 private:
  Cyclotomic(int order, std::vector<BigRational> coeffs);

  int order_ = 0;
  std::vector<BigRational> coeffs_{BigRational(0)};
};

std::ostream& operator<<(std::ostream& out, const Cyclotomic& value);

/// Accumulates sum_x c_x * w^{e_x} in cyclic form and reduces once at the end.
/// Used wherever an inner product has unit-root entries on one side.
class CyclicAccumulator {
 public:
  explicit CyclicAccumulator(int order);

  void add_times_root(const Cyclotomic& value, long exponent);
  void add(const Cyclotomic& value) { add_times_root(value, 0); }
  Cyclotomic result() const;
  bool is_zero() const;

 private:
  int order_;
  std::vector<BigRational> cyclic_;
};

// Free-function spellings used by generic (scalar-templated) code.
inline bool is_zero(const Cyclotomic& value) { return value.is_zero(); }
inline bool is_zero(const BigRational& value) { return sgn(value) == 0; }
inline Cyclotomic conj(const Cyclotomic& value) { return value.conj(); }
inline BigRational conj(const BigRational& value) { return value; }

}  // namespace mubsupport

namespace Eigen {

template <>
struct NumTraits<mubsupport::Cyclotomic> : GenericNumTraits<mubsupport::Cyclotomic> {
  using Real = mubsupport::Cyclotomic;
  using NonInteger = mubsupport::Cyclotomic;
  using Literal = mubsupport::Cyclotomic;
  using Nested = mubsupport::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 256
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

}  // namespace Eigen

namespace mubsupport {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CycMatrix = Matrix<Cyclotomic>;
using CycVector = Vector<Cyclotomic>;

}  // namespace mubsupport
