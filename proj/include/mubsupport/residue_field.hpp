#pragma once

#include <cstdint>
#include <vector>

namespace mubsupport {

/// Arithmetic in F_q for a prime q < 2^62.
///
/// The search engines map Z[w_n] into F_q with q = 1 mod n, where w_n has
/// exactly phi(n) images (the primitive n-th roots of unity mod q).
class ResidueField {
 public:
  explicit ResidueField(std::uint64_t modulus);

  /// Largest prime q < 2^61 with q = 1 mod order.
  static ResidueField with_roots_of_order(int order);

  std::uint64_t modulus() const { return q_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + q_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exponent) const;
  /// Fermat inverse; the argument must be nonzero.
  std::uint64_t inv(std::uint64_t a) const { return pow(a, q_ - 2); }
  /// Maps a signed integer into [0, q).
  std::uint64_t from_signed(long long value) const;

  /// All primitive roots of unity of the given order, as r^t for t coprime to
  /// the order in increasing t. Requires order | q - 1.
  std::vector<std::uint64_t> primitive_roots(int order) const;

 private:
  std::uint64_t q_;
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace mubsupport
