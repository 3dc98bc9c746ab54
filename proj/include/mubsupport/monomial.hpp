#pragma once

#include <vector>

#include "mubsupport/cyclotomic.hpp"
#include "mubsupport/mub.hpp"

namespace mubsupport {

/// Monomial factorization of H_k^dag H_j H_t for j != k in {1..d}.
///
/// In the sqrt(d)-scaled convention the product V = (H_k^dag H_j) H_t has a
/// single nonzero entry per row, at (l, permutation[l]), equal to
/// scale * phases[l] with scale = d and phases[l] = (j-k / d) g w^{-l^2 chi}.
struct MonomialDecomposition {
  int dim = 0;
  int j = 0;
  int k = 0;
  long chi = 0;
  int t = 0;
  int jacobi = 0;
  long scale = 0;
  std::vector<int> permutation;
  std::vector<Cyclotomic> phases;
  /// Exponent of w in phases[l], i.e. -l^2 chi mod d.
  std::vector<long> phase_exponents;
};

/// Scaled H_k^dag H_j H_t, using only root-exponent sums.
CycMatrix hadamard_triple_product(const MubSet& mubs, int k, int j, int t);

/// Throws TheoremViolation if the exact product is not the predicted monomial.
MonomialDecomposition monomial_decompose(int j, int k, int d);
MonomialDecomposition monomial_decompose(const MubSet& mubs, int j, int k);

/// True iff every entry of H_k^dag H_j H_{t'} is nonzero.
bool monomial_negative_check(int j, int k, int t_prime, int d);
bool monomial_negative_check(const MubSet& mubs, int j, int k, int t_prime);

bool is_monomial(const CycMatrix& m);

/// d = 2 has no chi; M = H_1^dag H_2 H_2 and M' = H_2^dag H_1 H_2, scaled.
struct QubitMonomialRelations {
  CycMatrix m;
  CycMatrix m_prime;
  bool m_is_monomial = false;
  bool m_prime_is_monomial = false;
};

QubitMonomialRelations qubit_monomial_relations();

}  // namespace mubsupport
