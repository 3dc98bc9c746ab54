#pragma once

#include <string>
#include <vector>

#include "mubsupport/cyclotomic.hpp"

namespace mubsupport {

/// Root-of-unity order of the field that holds dimension d: d itself for odd
/// primes, 4 for d = 2 (the second qubit Hadamard matrix needs i).
int field_order_for_dimension(int d);

/// Unnormalized ray representative; entries are computational-basis
/// components. Every operation in this library is invariant under a global
/// nonzero rescaling.
struct StateVector {
  int dim = 0;
  CycVector entries;
  std::string label;

  int order() const { return field_order_for_dimension(dim); }
  bool is_zero() const;
};

StateVector make_state(int dim, const std::vector<Cyclotomic>& entries, std::string label = {});
/// Computational basis state |x>.
StateVector basis_state(int dim, int x);

/// One basis of the standard set, stored as root exponents.
///
/// For j >= 1 the (x, k) entry of the sqrt(d)-scaled matrix is
/// w^{-kx + (j-1)x^2} (odd d) so columns are exactly orthogonal and
/// cross-basis overlaps z satisfy z conj(z) = d. Basis 0 is the identity.
class MubBasis {
 public:
  MubBasis(int dim, int index);

  int dim() const { return dim_; }
  int index() const { return index_; }
  int order() const { return order_; }
  bool is_computational() const { return index_ == 0; }

  /// Exponent of w_order at entry (x, k); only for Hadamard bases.
  int exponent(int x, int k) const { return exponents_[x * dim_ + k]; }

  StateVector column(int k) const;
  /// Scaled basis matrix (identity for basis 0).
  CycMatrix matrix() const;

  /// <phi_k^j | psi> in the scaled convention.
  Cyclotomic coefficient(int k, const StateVector& psi) const;
  std::vector<Cyclotomic> coefficients(const StateVector& psi) const;

  friend bool operator==(const MubBasis& a, const MubBasis& b) {
    return a.dim_ == b.dim_ && a.index_ == b.index_ && a.exponents_ == b.exponents_;
  }

 private:
  int dim_;
  int index_;
  int order_;
  std::vector<int> exponents_;
};

/// The d+1 standard MU bases: basis 0 computational, bases 1..d from H_j with
/// H_1 the Fourier matrix.
class MubSet {
 public:
  explicit MubSet(int dim);

  int dim() const { return dim_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(bases_.size()); }
  const MubBasis& basis(int j) const { return bases_.at(j); }
  const std::vector<MubBasis>& bases() const { return bases_; }

  StateVector column(int j, int k) const { return basis(j).column(k); }

  friend bool operator==(const MubSet& a, const MubSet& b) {
    return a.dim_ == b.dim_ && a.bases_ == b.bases_;
  }

 private:
  int dim_;
  int order_;
  std::vector<MubBasis> bases_;
};

/// Throws InvalidDimension for non-prime d.
MubSet build_mub_set(int d);

/// Multiplies by B^power, B = diag(1, w^{-1}, ..., w^{-(d-1)}).
StateVector apply_B(const StateVector& psi, long power);
/// Multiplies by D^power, D = diag(1, w, ..., w^{(d-1)^2}); diag(1, i) for d = 2.
StateVector apply_D(const StateVector& psi, long power);

/// sum_x conj(a_x) b_x. Throws DimensionMismatch on differing dims.
Cyclotomic inner_product(const StateVector& a, const StateVector& b);

/// Divides by the first nonzero entry so equal rays compare equal.
StateVector normalized_ray(const StateVector& psi);
bool same_ray(const StateVector& a, const StateVector& b);

/// Scaled transition matrix H_k^dag H_j, built from exponent sums only.
/// Basis 0 contributes the identity.
CycMatrix transition_matrix(const MubSet& mubs, int k, int j);

}  // namespace mubsupport
