#pragma once

#include <cstdint>
#include <vector>

#include "tvcable/qroots.hpp"

namespace tvcable {

/// e_l = sign * e_index in RT_r(T^2); sign == 0 means e_l = 0 (index is 0).
struct ReducedBasisIndex {
  int sign = 0;
  int index = 0;

  ReducedBasisIndex operator-() const { return {-sign, index}; }
  friend bool operator==(const ReducedBasisIndex&, const ReducedBasisIndex&) = default;
};

/// Coordinates in the orthonormal basis e_1..e_m; entry j-1 holds e_j.
template <typename Real>
using TQFTVector = VectorX<Real>;

/// Canonical form of any label l under e_{l+r} = -e_l, e_{-l} = -e_l and
/// e_{r-l} = e_l.
ReducedBasisIndex reduce_index(const TQFTParameter& param, std::int64_t l);

/// pi[j-1] is the canonical index of e_{2j-1}; every such label reduces with
/// sign +1.
std::vector<int> odd_basis_permutation(const TQFTParameter& param);

template <typename Real>
TQFTVector<Real> basis_vector(const TQFTParameter& param, int j) {
  if (j < 1 || j > param.m()) throw ValidationError("basis label out of range [1, m]");
  TQFTVector<Real> v = TQFTVector<Real>::Zero(param.m());
  v(j - 1) = Complex<Real>(1);
  return v;
}

/// Hermitian product sum_j u_j * conj(v_j).
template <typename Real>
Complex<Real> inner_product(const TQFTVector<Real>& u, const TQFTVector<Real>& v) {
  if (u.size() != v.size()) throw ValidationError("inner_product: vectors of different dimension");
  // Eigen's dot conjugates its left operand.
  return v.dot(u);
}

template <typename Real>
Real hermitian_norm_squared(const TQFTVector<Real>& v) {
  return v.squaredNorm();
}

/// Closure of the solid-torus core colored by e_l, computed after reduction.
template <typename Real>
Real evaluate_closure(const TQFTParameter& param, std::int64_t l) {
  const ReducedBasisIndex red = reduce_index(param, l);
  if (red.sign == 0) return Real(0);
  const Real value = loop_value<Real>(param, red.index);
  return red.sign > 0 ? value : Real(-value);
}

}  // namespace tvcable
