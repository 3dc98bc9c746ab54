#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mubsupport/kernel.hpp"
#include "mubsupport/mub.hpp"
#include "mubsupport/saturation.hpp"
#include "mubsupport/support.hpp"

namespace mubsupport {

/// All d = 3 rays with support 2 in every basis, one per ray, normalized.
/// Throws TheoremViolation unless exactly nine are found.
std::vector<StateVector> classify_d3();

struct RestrictionReport {
  std::uint64_t rays = 0;
  std::uint64_t determinants = 0;
  /// Smallest overall support among rays with support 3 in two bases.
  int min_total = 0;
};

/// Support 3 in two bases at d = 5 forces support 5 in the other four:
/// every 5x5 system of the four zero constraints plus one more basis vector
/// is nonsingular (exact Bareiss determinant), and the exact kernel ray of
/// every such pair of zero sets has the matching profile.
RestrictionReport verify_lemma5(int d = 5);

enum class MinorMatrix { fourier, hadamard, product };

struct MinorSelector {
  MinorMatrix kind = MinorMatrix::fourier;
  /// hadamard: H_j; product: H_k^dag H_j.
  int j = 1;
  int k = 1;

  std::string describe() const;
};

struct MinorsOptions {
  /// 0 means d.
  int max_order = 0;
  bool exhaustive = true;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
};

struct MinorsReport {
  std::uint64_t checked = 0;
  /// per_order[r] = minors of order r checked.
  std::vector<std::uint64_t> per_order;
};

/// Exact determinant of every (or a sample of) square submatrix. A vanishing
/// minor throws TheoremViolation. Exhaustive mode needs d <= 7.
MinorsReport minors_certify(const MubSet& mubs, const MinorSelector& selector, const MinorsOptions& options);
MinorsReport minors_certify(int d, const MinorSelector& selector, const MinorsOptions& options);

/// phi_{k1}^j - w^n phi_{k2}^j for every basis j, k1 < k2 and n.
std::vector<StateVector> two_term_states(int d);

/// Minimum total over non-decreasing size tuples in {1..d}^{d+1} accepted by
/// `admissible`, together with one minimizing tuple.
struct LadderResult {
  int min_total = 0;
  std::vector<int> minimizer;
  std::uint64_t profiles_admitted = 0;
};
LadderResult admissible_profile_minimum(int d, const std::function<bool(const std::vector<int>&)>& admissible);

/// Pair inequality on a sorted tuple.
bool pair_admissible(const std::vector<int>& sorted_sizes, int d);

/// A (5,5,5) state found by support5_triple_search.
struct TripleHit {
  int bases[3] = {0, 0, 0};
  std::vector<int> zeros[3];
  std::vector<int> sizes;
};

/// Exhaustive d = 7 constraint searches behind the sharp bound.
struct Support5Report {
  // (4, 2) zero splits: rays with sizes (3, 5) in two bases
  std::uint64_t rays_3_5 = 0;
  std::uint64_t rays_3_5_with_profile = 0;
  int min_other_3_5 = 0;
  // 2 + 2 zeros in two bases: a support-(5,5) witness
  std::optional<StateVector> pair_witness;
  SupportProfile pair_profile;
  // 2 + 2 + 2 zeros in three bases
  std::uint64_t systems_2_2_2 = 0;
  std::uint64_t degenerate_2_2_2 = 0;
  std::uint64_t triples = 0;
  int min_other_triples = 0;
  std::vector<TripleHit> sample_triples;
  std::optional<StateVector> triple_witness;
  SupportProfile triple_profile;
  // 3 + 2 + 2 zeros in three bases
  std::uint64_t systems_3_2_2 = 0;
  std::uint64_t singular_3_2_2 = 0;
  double elapsed_seconds = 0.0;

  /// Support (3,5) in two bases forces support 7 in the other six.
  bool three_five_forces_full() const { return rays_3_5_with_profile > 0 && min_other_3_5 == 7; }
  bool pairs_exist() const { return pair_witness.has_value(); }
  bool no_triples() const { return triples == 0; }
  /// Support 5 in three bases forces support 7 elsewhere.
  bool triples_force_full() const { return degenerate_2_2_2 == 0 && (triples == 0 || min_other_triples == 7); }
  /// No state has support <= 5 in four bases (so S = 40 is impossible).
  bool no_four_at_most_five() const { return triples_force_full(); }
  /// No state with sizes <= (4, 5, 5) in three bases.
  bool no_four_five_five() const { return systems_3_2_2 > 0 && singular_3_2_2 == 0; }
};

Support5Report support5_triple_search();

/// Sharp bound for d in {2, 3, 5, 7}: the minimum over admissible profiles
/// plus verified witnesses attaining it.
BoundReport sharp_bound(int d, const SaturationOptions& search_options = {});

// Checks on the basis set itself; each returns the first witness of failure.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::uint64_t cases = 0;
};

CheckResult check_unitarity(const MubSet& mubs);
CheckResult check_unbiasedness(const MubSet& mubs);
CheckResult check_generation_identity(const MubSet& mubs);
CheckResult check_monomial_all(const MubSet& mubs, bool uniqueness);
/// Any w^n appears at most twice in a column of H_j (j >= 2), exactly once in
/// columns k != 0 of H_1.
CheckResult check_root_frequency(const MubSet& mubs);
/// Columns of distinct Hadamard bases agree up to a fixed w^n in <= 2 entries.
CheckResult check_identical_entries(const MubSet& mubs);

/// Sparse combination of basis vectors with random unit-root-times-rational
/// coefficients; occasionally a mix of two bases.
StateVector random_state(int d, std::mt19937_64& rng);

struct FuzzReport {
  std::uint64_t samples = 0;
  std::uint64_t pair_violations = 0;
  std::uint64_t product_violations = 0;
  std::uint64_t symmetry_violations = 0;
  std::string first_failure;
};

/// Pair sum and product bounds plus rephase/permute/conjugate invariance.
FuzzReport fuzz_pair_inequalities(int d, std::uint64_t samples, std::uint64_t seed);

}  // namespace mubsupport
