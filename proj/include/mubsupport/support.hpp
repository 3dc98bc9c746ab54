#pragma once

#include <optional>
#include <vector>

#include "mubsupport/cyclotomic.hpp"
#include "mubsupport/mub.hpp"

namespace mubsupport {

/// Number of nonzero coefficients of psi in the basis. Throws DegenerateState
/// for the zero vector.
int support_size(const StateVector& psi, const MubBasis& basis);

struct SupportProfile {
  int dim = 0;
  std::vector<int> sizes;
  int total = 0;

  friend bool operator==(const SupportProfile&, const SupportProfile&) = default;
};

SupportProfile support_profile(const StateVector& psi, const MubSet& mubs);
/// Builds a profile from raw sizes (for profile-level logic and tests).
SupportProfile make_profile(int dim, std::vector<int> sizes);

struct PairCheck {
  int j = 0;
  int k = 0;
  int sum = 0;
  /// sum - (d + 1)
  int sum_slack = 0;
  bool sum_ok = false;
  int product = 0;
  /// product - d
  int product_slack = 0;
  bool product_ok = false;

  bool ok() const { return sum_ok && product_ok; }
};

PairCheck check_pair_inequality(const SupportProfile& profile, int j, int k);
std::vector<PairCheck> check_all_pairs(const SupportProfile& profile);

enum class BoundStatus { satisfied, saturated, violated };
const char* to_string(BoundStatus status);

/// (d + 1)^2 / 2.
BigRational complete_bound(int d);
BoundStatus check_complete_bound(const SupportProfile& profile);

/// sizes[a] + sizes[b] + sizes[c] >= 3(d + 1)/2.
bool check_triple_bound(const SupportProfile& profile, int a = 0, int b = 1, int c = 2);

struct ZeroDistribution {
  int dim = 0;
  int basis = 0;
  std::vector<int> indices;
};

ZeroDistribution zero_distribution(const StateVector& psi, int j, const MubSet& mubs);

/// The shift mu with b = a + mu (mod d) as sets, if any.
std::optional<int> cyclic_shift_between(const std::vector<int>& a, const std::vector<int>& b, int d);
std::optional<int> compatible(const ZeroDistribution& z, const ZeroDistribution& z_prime);

/// Sorted set shifted by mu mod d.
std::vector<int> shift_set(const std::vector<int>& set, int mu, int d);
/// Lexicographically minimal member of the shift class, and the shift reaching it.
std::pair<std::vector<int>, int> canonical_shift(const std::vector<int>& set, int d);

/// One lexicographically minimal set per shift class of n-subsets of Z_d.
/// Throws TrivialClass for n in {0, d}.
std::vector<std::vector<int>> canonical_class_representatives(int d, int n);

/// All n-subsets of {0..d-1} in lexicographic order.
std::vector<std::vector<int>> all_subsets(int d, int n);

/// True iff every size equals (d + 1)/2.
bool equal_support_condition(const SupportProfile& profile);

enum class Achievable { yes, no, unknown };
const char* to_string(Achievable value);

struct BoundReport {
  int dim = 0;
  BigRational T;
  std::optional<int> sharp;
  Achievable achievable = Achievable::unknown;
  std::vector<StateVector> witnesses;
  /// Facts the sharp value rests on, one line each.
  std::vector<std::string> notes;
};

}  // namespace mubsupport
