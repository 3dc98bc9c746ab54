#include "mubsupport/mub.hpp"

#include <string>

#include "mubsupport/errors.hpp"
#include "mubsupport/number_theory.hpp"

namespace mubsupport {

int field_order_for_dimension(int d) { return d == 2 ? 4 : d; }

bool StateVector::is_zero() const {
  for (Eigen::Index i = 0; i < entries.size(); ++i) {
    if (!entries(i).is_zero()) return false;
  }
  return true;
}

StateVector make_state(int dim, const std::vector<Cyclotomic>& entries, std::string label) {
  require_prime(dim);
  if (static_cast<int>(entries.size()) != dim) {
    throw DimensionMismatch("state needs " + std::to_string(dim) + " entries, got " +
                            std::to_string(entries.size()));
  }
  const int order = field_order_for_dimension(dim);
  StateVector out{dim, CycVector(dim), std::move(label)};
  for (int x = 0; x < dim; ++x) out.entries(x) = entries[x].in_order(order);
  return out;
}

StateVector basis_state(int dim, int x) {
  require_prime(dim);
  const int order = field_order_for_dimension(dim);
  StateVector out{dim, CycVector::Constant(dim, Cyclotomic::zero(order)),
                  "|" + std::to_string(x) + ">"};
  out.entries(x) = Cyclotomic::one(order);
  return out;
}

MubBasis::MubBasis(int dim, int index)
    : dim_(dim), index_(index), order_(field_order_for_dimension(dim)) {
  if (index < 0 || index > dim) throw InvalidDimension("basis label out of range");
  if (index == 0) return;
  exponents_.resize(static_cast<std::size_t>(dim) * dim);
  for (long x = 0; x < dim; ++x) {
    for (long k = 0; k < dim; ++k) {
      long e = 0;
      if (dim == 2) {
        // w_2 = w_4^2; H_2 = D F with D = diag(1, i).
        e = -2 * k * x + (index - 1) * x;
      } else {
        e = -k * x + (index - 1) * x * x;
      }
      exponents_[x * dim + k] = static_cast<int>(mod_floor(e, order_));
    }
  }
}

StateVector MubBasis::column(int k) const {
  if (is_computational()) {
    auto out = basis_state(dim_, k);
    out.label = "phi^0_" + std::to_string(k);
    return out;
  }
  StateVector out{dim_, CycVector(dim_), "phi^" + std::to_string(index_) + "_" + std::to_string(k)};
  for (int x = 0; x < dim_; ++x) out.entries(x) = Cyclotomic::root_power(order_, exponent(x, k));
  return out;
}

CycMatrix MubBasis::matrix() const {
  CycMatrix out(dim_, dim_);
  for (int x = 0; x < dim_; ++x) {
    for (int k = 0; k < dim_; ++k) {
      if (is_computational()) {
        out(x, k) = x == k ? Cyclotomic::one(order_) : Cyclotomic::zero(order_);
      } else {
        out(x, k) = Cyclotomic::root_power(order_, exponent(x, k));
      }
    }
  }
  return out;
}

Cyclotomic MubBasis::coefficient(int k, const StateVector& psi) const {
  if (psi.dim != dim_) throw DimensionMismatch("state and basis dimensions differ");
  if (is_computational()) return psi.entries(k).in_order(order_);
  CyclicAccumulator sum(order_);
  for (int x = 0; x < dim_; ++x) sum.add_times_root(psi.entries(x), -exponent(x, k));
  return sum.result();
}

std::vector<Cyclotomic> MubBasis::coefficients(const StateVector& psi) const {
  std::vector<Cyclotomic> out;
  out.reserve(dim_);
  for (int k = 0; k < dim_; ++k) out.push_back(coefficient(k, psi));
  return out;
}

MubSet::MubSet(int dim) : dim_(dim), order_(field_order_for_dimension(dim)) {
  require_prime(dim);
  bases_.reserve(dim + 1);
  for (int j = 0; j <= dim; ++j) bases_.emplace_back(dim, j);
}

MubSet build_mub_set(int d) { return MubSet(d); }

namespace {

StateVector apply_diagonal(const StateVector& psi, long power, bool clock) {
  const int d = psi.dim;
  const int order = psi.order();
  StateVector out = psi;
  for (long x = 0; x < d; ++x) {
    long e = 0;
    if (clock) {
      e = d == 2 ? x : x * x;
    } else {
      e = d == 2 ? -2 * x : -x;
    }
    out.entries(x) = psi.entries(x).in_order(order).times_root(mod_floor(e * (power % order), order));
  }
  return out;
}

}  // namespace

StateVector apply_B(const StateVector& psi, long power) { return apply_diagonal(psi, power, false); }

StateVector apply_D(const StateVector& psi, long power) { return apply_diagonal(psi, power, true); }

Cyclotomic inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim != b.dim) throw DimensionMismatch("inner product of states with different dims");
  Cyclotomic sum = Cyclotomic::zero(a.order());
  for (int x = 0; x < a.dim; ++x) {
    if (a.entries(x).is_zero() || b.entries(x).is_zero()) continue;
    sum += a.entries(x).conj() * b.entries(x);
  }
  return sum;
}

StateVector normalized_ray(const StateVector& psi) {
  for (int x = 0; x < psi.dim; ++x) {
    if (!psi.entries(x).is_zero()) {
      const Cyclotomic scale = psi.entries(x).inverse();
      StateVector out = psi;
      for (int y = 0; y < psi.dim; ++y) out.entries(y) = psi.entries(y) * scale;
      return out;
    }
  }
  throw DegenerateState("zero vector has no ray");
}

bool same_ray(const StateVector& a, const StateVector& b) {
  if (a.dim != b.dim) return false;
  const auto na = normalized_ray(a);
  const auto nb = normalized_ray(b);
  for (int x = 0; x < a.dim; ++x) {
    if (na.entries(x) != nb.entries(x)) return false;
  }
  return true;
}

CycMatrix transition_matrix(const MubSet& mubs, int k, int j) {
  const int d = mubs.dim();
  const int order = mubs.order();
  const MubBasis& left = mubs.basis(k);
  const MubBasis& right = mubs.basis(j);
  CycMatrix out(d, d);
  const Cyclotomic one = Cyclotomic::one(order);
  for (int l = 0; l < d; ++l) {
    for (int lp = 0; lp < d; ++lp) {
      if (left.is_computational() && right.is_computational()) {
        out(l, lp) = l == lp ? one : Cyclotomic::zero(order);
      } else if (left.is_computational()) {
        out(l, lp) = Cyclotomic::root_power(order, right.exponent(l, lp));
      } else if (right.is_computational()) {
        out(l, lp) = Cyclotomic::root_power(order, -left.exponent(lp, l));
      } else {
        CyclicAccumulator sum(order);
        for (int x = 0; x < d; ++x) sum.add_times_root(one, right.exponent(x, lp) - left.exponent(x, l));
        out(l, lp) = sum.result();
      }
    }
  }
  return out;
}

}  // namespace mubsupport
