#include "mubsupport/kernel.hpp"

#include <set>
#include <string>

#include "mubsupport/errors.hpp"
#include "mubsupport/exact_linalg.hpp"

namespace mubsupport {

CycMatrix constraint_matrix(const MubSet& mubs, const std::vector<BasisIndex>& rows) {
  const int d = mubs.dim();
  const int order = mubs.order();
  CycMatrix out(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto [j, k] = rows[r];
    if (j < 0 || j > d || k < 0 || k >= d) throw InvalidDimension("constraint label out of range");
    const MubBasis& basis = mubs.basis(j);
    for (int x = 0; x < d; ++x) {
      if (basis.is_computational()) {
        out(r, x) = x == k ? Cyclotomic::one(order) : Cyclotomic::zero(order);
      } else {
        out(r, x) = Cyclotomic::root_power(order, -basis.exponent(x, k));
      }
    }
  }
  return out;
}

CycMatrix exact_kernel(const MubSet& mubs, const std::vector<BasisIndex>& rows) {
  if (rows.empty()) {
    CycMatrix identity(mubs.dim(), mubs.dim());
    for (int i = 0; i < mubs.dim(); ++i) {
      for (int j = 0; j < mubs.dim(); ++j) {
        identity(i, j) = i == j ? Cyclotomic::one(mubs.order()) : Cyclotomic::zero(mubs.order());
      }
    }
    return identity;
  }
  return nullspace(constraint_matrix(mubs, rows));
}

StateVector kernel_ray(const KernelSystem& system) { return kernel_ray(system, build_mub_set(system.dim)); }

StateVector kernel_ray(const KernelSystem& system, const MubSet& mubs) {
  const int d = mubs.dim();
  if (system.dim != d) throw DimensionMismatch("kernel system and basis set dimensions differ");
  if (static_cast<int>(system.rows.size()) != d - 1) {
    throw DimensionMismatch("kernel system needs exactly d - 1 rows");
  }
  std::set<int> bases;
  for (const auto& row : system.rows) bases.insert(row.basis);
  if (bases.size() > 2) throw InvalidDimension("kernel system rows must come from at most two bases");

  const CycMatrix kernel = exact_kernel(mubs, system.rows);
  if (kernel.cols() != 1) {
    throw TheoremViolation("rows from two MU bases are linearly dependent (kernel dimension " +
                           std::to_string(kernel.cols()) + ")");
  }
  StateVector psi{d, kernel.col(0), "kernel"};
  for (const auto& row : system.rows) {
    if (!mubs.basis(row.basis).coefficient(row.index, psi).is_zero()) {
      throw TheoremViolation("kernel vector fails a constraint row");
    }
  }
  return normalized_ray(psi);
}

std::vector<std::vector<int>> zero_sets(const StateVector& psi, const MubSet& mubs) {
  std::vector<std::vector<int>> out;
  for (const auto& basis : mubs.bases()) {
    std::vector<int> zeros;
    for (int k = 0; k < mubs.dim(); ++k) {
      if (basis.coefficient(k, psi).is_zero()) zeros.push_back(k);
    }
    out.push_back(std::move(zeros));
  }
  return out;
}

}  // namespace mubsupport
