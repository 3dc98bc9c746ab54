#include "mubsupport/residue_field.hpp"

#include <numeric>
#include <string>

#include "mubsupport/errors.hpp"

namespace mubsupport {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ResidueField::ResidueField(std::uint64_t modulus) : q_(modulus) {
  if (modulus >= (1ULL << 62) || !is_prime_u64(modulus)) {
    throw InvalidModulus("residue field modulus must be a prime below 2^62");
  }
}

ResidueField ResidueField::with_roots_of_order(int order) {
  const std::uint64_t n = static_cast<std::uint64_t>(order);
  std::uint64_t q = ((1ULL << 61) - 1) / n * n + 1;
  while (q >= (1ULL << 61)) q -= n;
  while (!is_prime_u64(q)) q -= n;
  return ResidueField(q);
}

std::uint64_t ResidueField::pow(std::uint64_t base, std::uint64_t exponent) const {
  return powmod(base, exponent, q_);
}

std::uint64_t ResidueField::from_signed(long long value) const {
  if (value >= 0) return static_cast<std::uint64_t>(value) % q_;
  const std::uint64_t m = static_cast<std::uint64_t>(-(value + 1)) % q_;
  return q_ - 1 - m;
}

std::vector<std::uint64_t> ResidueField::primitive_roots(int order) const {
  const std::uint64_t n = static_cast<std::uint64_t>(order);
  if (order < 2 || (q_ - 1) % n != 0) {
    throw InvalidModulus("q - 1 is not divisible by " + std::to_string(order));
  }
  std::vector<std::uint64_t> prime_factors;
  for (std::uint64_t f = 2, m = n; m > 1; ++f) {
    if (m % f == 0) {
      prime_factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  std::uint64_t root = 0;
  for (std::uint64_t a = 2; root == 0; ++a) {
    const std::uint64_t r = pow(a, (q_ - 1) / n);
    bool primitive = true;
    for (auto f : prime_factors) {
      if (pow(r, n / f) == 1) primitive = false;
    }
    if (primitive) root = r;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 1; t < n; ++t) {
    if (std::gcd(t, n) == 1) out.push_back(pow(root, t));
  }
  return out;
}

}  // namespace mubsupport
