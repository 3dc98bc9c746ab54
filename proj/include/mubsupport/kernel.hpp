#pragma once

#include <vector>

#include "mubsupport/cyclotomic.hpp"
#include "mubsupport/mub.hpp"

namespace mubsupport {

/// The basis vector |phi_index^basis>.
struct BasisIndex {
  int basis = 0;
  int index = 0;

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// Orthogonality constraints <phi_index^basis | psi> = 0.
struct KernelSystem {
  int dim = 0;
  std::vector<BasisIndex> rows;
};

/// Constraint rows as an exact matrix: row i is the conjugated column.
CycMatrix constraint_matrix(const MubSet& mubs, const std::vector<BasisIndex>& rows);

/// Columns span {psi : every row vanishes}; exact Bareiss over Q(w).
CycMatrix exact_kernel(const MubSet& mubs, const std::vector<BasisIndex>& rows);

/// Unique ray orthogonal to d - 1 vectors taken from at most two bases.
/// A rank drop is a TheoremViolation; the result is re-checked against every row.
StateVector kernel_ray(const KernelSystem& system, const MubSet& mubs);
StateVector kernel_ray(const KernelSystem& system);

/// Zero sets of zero_distribution for every basis, in basis order.
std::vector<std::vector<int>> zero_sets(const StateVector& psi, const MubSet& mubs);

}  // namespace mubsupport
