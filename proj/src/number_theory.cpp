#include "mubsupport/number_theory.hpp"

#include <string>

#include "mubsupport/errors.hpp"

namespace mubsupport {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

void require_prime(long d) {
  if (!is_prime(d)) throw InvalidDimension("dimension " + std::to_string(d) + " is not prime");
}

long mod_floor(long value, long modulus) {
  const long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

long mod_inverse(long a, long d) {
  if (d < 2) throw InvalidModulus("modulus must be at least 2");
  long r0 = d, r1 = mod_floor(a, d);
  long s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long q = r0 / r1;
    long t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw NoInverse(std::to_string(a) + " has no inverse modulo " + std::to_string(d));
  }
  return mod_floor(s0, d);
}

int jacobi_symbol(long a, long n) {
  if (n <= 0 || n % 2 == 0) {
    throw InvalidModulus("jacobi symbol needs an odd positive modulus, got " + std::to_string(n));
  }
  a = mod_floor(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Cyclotomic gauss_sum(int d, long a, long l) {
  if (d < 3 || !is_prime(d)) throw InvalidModulus("gauss_sum needs an odd prime");
  if (mod_floor(a, d) == 0) {
    throw DegenerateSum("gauss_sum with a = 0 mod d is a geometric series");
  }
  CyclicAccumulator sum(d);
  const Cyclotomic one = Cyclotomic::one(d);
  for (long x = 0; x < d; ++x) sum.add_times_root(one, a * x * x + l * x);
  return sum.result();
}

Cyclotomic gauss_sum_closed_form(int d, long a, long l) {
  const long chi = mod_inverse(4 * a, d);
  const Cyclotomic g = quadratic_gauss_element(d).value;
  const Cyclotomic phase = g.times_root(-mod_floor(l * l, d) * chi);
  return jacobi_symbol(a, d) < 0 ? -phase : phase;
}

QuadraticGaussElement quadratic_gauss_element(int d) {
  if (d < 3 || !is_prime(d)) throw InvalidModulus("quadratic Gauss sum needs an odd prime");
  CyclicAccumulator sum(d);
  const Cyclotomic one = Cyclotomic::one(d);
  for (long x = 0; x < d; ++x) sum.add_times_root(one, x * x);
  return {d, sum.result()};
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / i;
  return out;
}

}  // namespace mubsupport
