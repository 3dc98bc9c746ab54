#include "mubsupport/monomial.hpp"

#include <string>

#include "mubsupport/errors.hpp"
#include "mubsupport/number_theory.hpp"

namespace mubsupport {

namespace {

void require_hadamard_labels(const MubSet& mubs, int j, int k) {
  const int d = mubs.dim();
  if (d == 2) throw InvalidDimension("monomial decomposition needs an odd prime");
  if (j < 1 || j > d || k < 1 || k > d || j == k) {
    throw InvalidDimension("labels must be distinct and in 1.." + std::to_string(d));
  }
}

std::string where(int d, int j, int k) {
  return "d=" + std::to_string(d) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
}

}  // namespace

CycMatrix hadamard_triple_product(const MubSet& mubs, int k, int j, int t) {
  const CycMatrix p = transition_matrix(mubs, k, j);
  const MubBasis& right = mubs.basis(t);
  const int d = mubs.dim();
  if (right.is_computational()) return p;
  CycMatrix out(d, d);
  for (int l = 0; l < d; ++l) {
    for (int c = 0; c < d; ++c) {
      CyclicAccumulator sum(mubs.order());
      for (int m = 0; m < d; ++m) {
        if (!p(l, m).is_zero()) sum.add_times_root(p(l, m), right.exponent(m, c));
      }
      out(l, c) = sum.result();
    }
  }
  return out;
}

MonomialDecomposition monomial_decompose(int j, int k, int d) {
  return monomial_decompose(build_mub_set(d), j, k);
}

MonomialDecomposition monomial_decompose(const MubSet& mubs, int j, int k) {
  require_hadamard_labels(mubs, j, k);
  const int d = mubs.dim();
  MonomialDecomposition out;
  out.dim = d;
  out.j = j;
  out.k = k;
  out.chi = mod_inverse(4L * (j - k), d);
  out.t = static_cast<int>(mod_floor(out.chi, d)) + 1;
  out.jacobi = jacobi_symbol(j - k, d);
  out.scale = d;
  const Cyclotomic g = quadratic_gauss_element(d).value;
  const Cyclotomic signed_g = out.jacobi > 0 ? g : -g;

  const CycMatrix v = hadamard_triple_product(mubs, k, j, out.t);
  const Cyclotomic scale(static_cast<long>(d));
  for (long l = 0; l < d; ++l) {
    const int column = static_cast<int>(mod_floor(2 * l * out.chi, d));
    const long e = mod_floor(-l * l * out.chi, d);
    const Cyclotomic phase = signed_g.times_root(e);
    for (int c = 0; c < d; ++c) {
      if (c == column) {
        if (v(l, c) != scale * phase) {
          throw TheoremViolation("monomial entry has the wrong phase at " + where(d, j, k) +
                                 " row " + std::to_string(l));
        }
      } else if (!v(l, c).is_zero()) {
        throw TheoremViolation("product is not monomial at " + where(d, j, k) + " row " +
                               std::to_string(l));
      }
    }
    out.permutation.push_back(column);
    out.phases.push_back(phase);
    out.phase_exponents.push_back(e);
  }
  return out;
}

bool monomial_negative_check(int j, int k, int t_prime, int d) {
  return monomial_negative_check(build_mub_set(d), j, k, t_prime);
}

bool monomial_negative_check(const MubSet& mubs, int j, int k, int t_prime) {
  require_hadamard_labels(mubs, j, k);
  if (t_prime < 1 || t_prime > mubs.dim()) throw InvalidDimension("t' must be in 1..d");
  const CycMatrix v = hadamard_triple_product(mubs, k, j, t_prime);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) return false;
  }
  return true;
}

bool is_monomial(const CycMatrix& m) {
  if (m.rows() != m.cols()) return false;
  std::vector<int> column_hits(m.cols(), 0);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    int row_hits = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) {
        ++row_hits;
        ++column_hits[c];
      }
    }
    if (row_hits != 1) return false;
  }
  for (int hits : column_hits) {
    if (hits != 1) return false;
  }
  return true;
}

QubitMonomialRelations qubit_monomial_relations() {
  const MubSet mubs = build_mub_set(2);
  QubitMonomialRelations out;
  out.m = hadamard_triple_product(mubs, 1, 2, 2);
  out.m_prime = hadamard_triple_product(mubs, 2, 1, 2);
  out.m_is_monomial = is_monomial(out.m);
  out.m_prime_is_monomial = is_monomial(out.m_prime);
  return out;
}

}  // namespace mubsupport
