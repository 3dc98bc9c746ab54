#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "mubsupport/kernel.hpp"
#include "mubsupport/mub.hpp"
#include "mubsupport/residue_field.hpp"

namespace mubsupport {

/// Exact zero pattern of a constrained ray, per basis.
struct RayZeros {
  /// False when the rows have rank below d - 1 over Q(w).
  bool unique = false;
  std::vector<std::vector<int>> zeros;
  /// Embeddings that had to be evaluated (1 unless a residue zero needed confirming).
  int embeddings_used = 0;

  std::vector<int> sizes(int dim) const;
};

/// Decides zero patterns of kernel rays exactly without cyclotomic arithmetic.
///
/// Z[w] is mapped into F_q through all phi(n) embeddings w -> r. For d - 1
/// unit-root rows the adjugate vector and every overlap with it have reduced
/// integer coefficients bounded by d! < q, so such a value vanishes iff it
/// vanishes under every embedding. A rank of d - 1 in any embedding pins the
/// rank over Q(w); rank d - 1 in none means the rank over Q(w) is lower.
class ResidueProfiler {
 public:
  explicit ResidueProfiler(const MubSet& mubs);

  int dim() const { return dim_; }
  std::uint64_t modulus() const { return field_.modulus(); }
  int embeddings() const { return static_cast<int>(powers_.size()); }

  /// rows must hold exactly d - 1 constraints.
  RayZeros ray(const std::vector<BasisIndex>& rows) const;

  /// Exact singularity test for d constraints.
  bool is_singular(const std::vector<BasisIndex>& rows) const;

 private:
  std::uint64_t entry(int embedding, const BasisIndex& row, int x) const;
  /// Gauss-Jordan on the constraint rows; returns the rank and, for rank
  /// d - 1 with d - 1 rows, fills `kernel`.
  int solve(int embedding, const std::vector<BasisIndex>& rows, std::vector<std::uint64_t>& kernel) const;
  std::uint64_t coefficient(int embedding, int j, int k, const std::vector<std::uint64_t>& v) const;

  int dim_;
  int order_;
  ResidueField field_;
  std::vector<std::vector<std::uint64_t>> powers_;
  // conjugate exponents -E(j, x, k) mod order, laid out [j][k][x]
  std::vector<int> conj_exponents_;
};

/// Double-precision screen for the saturation search. Returns nothing when a
/// non-forced coefficient falls below 1e-6 of the largest one, or the
/// elimination is ill-conditioned; the caller then decides exactly.
class FloatProfiler {
 public:
  explicit FloatProfiler(const MubSet& mubs);

  static constexpr double kRelativeThreshold = 1e-6;

  std::optional<std::vector<std::vector<int>>> ray(const std::vector<BasisIndex>& rows) const;

 private:
  int dim_;
  std::vector<std::complex<double>> roots_;
  std::vector<int> conj_exponents_;
  int order_;
};

}  // namespace mubsupport
