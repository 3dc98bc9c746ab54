#pragma once

#include <cstdint>

#include "mubsupport/cyclotomic.hpp"

namespace mubsupport {

bool is_prime(long n);

/// Throws InvalidDimension unless d is prime.
void require_prime(long d);

/// Nonnegative residue of value mod modulus.
long mod_floor(long value, long modulus);

/// The inverse of a modulo d, in {1..d-1}. Throws NoInverse if d | a.
long mod_inverse(long a, long d);

/// Jacobi symbol (a/n) for odd n > 0; 0 iff gcd(a, n) > 1.
int jacobi_symbol(long a, long n);

/// sum_{x=0}^{d-1} w^{a x^2 + l x} in Q(w_d), exactly, with no 1/sqrt(d) prefactor.
/// Throws DegenerateSum if d | a.
Cyclotomic gauss_sum(int d, long a, long l);

/// The closed form w^{-l^2 chi_a} (a/d) g with 4 a chi_a = 1 mod d and
/// g = gauss_sum(d, 1, 0). Independent of gauss_sum's direct summation.
Cyclotomic gauss_sum_closed_form(int d, long a, long l);

/// g = sum_x w^{x^2}, the in-field stand-in for eps_d sqrt(d).
struct QuadraticGaussElement {
  int dim;
  Cyclotomic value;

  /// (-1)^{(d-1)/2} d, which g^2 equals exactly.
  long square() const { return (dim % 4 == 1) ? dim : -dim; }
};

QuadraticGaussElement quadratic_gauss_element(int d);

std::uint64_t binomial(int n, int k);

}  // namespace mubsupport
