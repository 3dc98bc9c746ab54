#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "mubsupport/cyclotomic.hpp"

namespace mubsupport {

/// Row echelon form produced by fraction-free (Bareiss) elimination.
///
/// Every division performed is exact: the divisor is the previous pivot,
/// which divides all updated 2x2 cross terms. Zero tests go through the
/// free function `is_zero`, so any exact field scalar works.
template <typename Scalar>
struct Echelon {
  Matrix<Scalar> rows;
  std::vector<Eigen::Index> pivot_columns;
  int swaps = 0;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_columns.size()); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> bareiss_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.rows = input;
  Matrix<Scalar>& m = out.rows;
  Scalar previous(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index pivot = r;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      m.row(pivot).swap(m.row(r));
      ++out.swaps;
    }
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      const bool lead_zero = is_zero(m(i, c));
      for (Eigen::Index j = c + 1; j < m.cols(); ++j) {
        Scalar value = m(r, c) * m(i, j);
        if (!lead_zero) value -= m(i, c) * m(r, j);
        m(i, j) = value / previous;
      }
      m(i, c) = Scalar(0);
    }
    previous = m(r, c);
    out.pivot_columns.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  if (input.rows() == 0) return Scalar(1);
  const auto echelon = bareiss_echelon(input);
  const Eigen::Index n = input.rows();
  if (echelon.rank() < n) return Scalar(0) * input(0, 0);
  Scalar det = echelon.rows(n - 1, n - 1);
  if (echelon.swaps % 2 != 0) det = -det;
  return det;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  return bareiss_echelon(input).rank();
}

/// Basis of {v : input * v = 0}, one column per free variable. Each basis
/// vector has a 1 in its free coordinate.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const auto echelon = bareiss_echelon(input);
  const Matrix<Scalar>& e = echelon.rows;
  const Eigen::Index n = input.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : echelon.pivot_columns) is_pivot[c] = true;

  Scalar zero = Scalar(0);
  Scalar one = Scalar(1);
  if (input.size() > 0) {
    zero = Scalar(0) * input(0, 0);
    one = zero + Scalar(1);
  }

  Matrix<Scalar> basis(n, n - echelon.rank());
  Eigen::Index column = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector<Scalar> v = Vector<Scalar>::Constant(n, zero);
    v(f) = one;
    for (Eigen::Index r = echelon.rank() - 1; r >= 0; --r) {
      const Eigen::Index p = echelon.pivot_columns[r];
      Scalar acc = zero;
      for (Eigen::Index c = p + 1; c < n; ++c) {
        if (!is_zero(v(c)) && !is_zero(e(r, c))) acc += e(r, c) * v(c);
      }
      v(p) = -acc / e(r, p);
    }
    basis.col(column++) = v;
  }
  return basis;
}

/// Conjugate transpose for scalars whose conjugation Eigen does not know.
template <typename Derived>
Matrix<typename Derived::Scalar> exact_adjoint(const Eigen::MatrixBase<Derived>& input) {
  Matrix<typename Derived::Scalar> out(input.cols(), input.rows());
  for (Eigen::Index i = 0; i < input.rows(); ++i) {
    for (Eigen::Index j = 0; j < input.cols(); ++j) out(j, i) = conj(input(i, j));
  }
  return out;
}

/// Plain triple-loop product; avoids Eigen's blocked kernels for heavy scalars.
template <typename A, typename B>
Matrix<typename A::Scalar> exact_product(const Eigen::MatrixBase<A>& lhs,
                                         const Eigen::MatrixBase<B>& rhs) {
  using Scalar = typename A::Scalar;
  eigen_assert(lhs.cols() == rhs.rows());
  Matrix<Scalar> out(lhs.rows(), rhs.cols());
  for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
    for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
      Scalar acc = Scalar(0);
      for (Eigen::Index k = 0; k < lhs.cols(); ++k) {
        if (!is_zero(lhs(i, k)) && !is_zero(rhs(k, j))) acc += lhs(i, k) * rhs(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace mubsupport
