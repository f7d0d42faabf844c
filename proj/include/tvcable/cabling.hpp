#pragma once

#include <vector>

#include "tvcable/exact.hpp"
#include "tvcable/torus_basis.hpp"

namespace tvcable {

/// S_i = {-(i-1)/2, ..., (i-1)/2}, stored in half-units: -(i-1), -(i-3), ..., i-1.
struct ColorSet {
  int color;
  std::vector<int> half_units;
};

ColorSet color_set(int i);

/// Exact coordinates of a vector in e_1..e_m.
using ExactVector = std::vector<PhaseSum>;

/// Image of e_i under the (p,q)-cabling map, by Morton's formula
///
///   e_i -> A^(pq(i^2-1)/2) * sum_{k in S_i} A^(-2pk(qk+1)) e_{2qk+1},
///
/// with every target label reduced to the canonical basis.
ExactVector cable_column(const TQFTParameter& param, int p, int q, int i);

/// Exact matrix of a cabling map (or of its inverse) on RT_r(T^2).
/// Columns are indexed by the source basis e_1..e_m and rows by the
/// canonical target basis.
class CablingOperator {
 public:
  CablingOperator(TQFTParameter param, int p, int q, ExactMatrix entries, bool inverse = false);

  const TQFTParameter& parameter() const noexcept { return param_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  bool is_inverse() const noexcept { return inverse_; }
  int dimension() const noexcept { return entries_.rows(); }
  const ExactMatrix& entries() const noexcept { return entries_; }

  template <typename Real = double>
  MatrixX<Real> numeric() const {
    return entries_.numeric<Real>(param_);
  }

 private:
  TQFTParameter param_;
  int p_;
  int q_;
  bool inverse_;
  ExactMatrix entries_;
};

CablingOperator cabling_matrix(const TQFTParameter& param, int p, int q);

/// Cabling map with every phase of Morton's formula taken at A^2 instead of A.
/// This is the normalisation in which closing against unknot loop values gives
/// eta_r * J_i(K, A^4); knot complements are glued with this matrix. For q = 2
/// it has the same shape as cabling_matrix(param, 2p, 2).
CablingOperator gluing_matrix(const TQFTParameter& param, int p, int q);

/// The (p,2) cabling map written as perm * diag(left) * T * diag(right) where
/// T is the alternating upper triangle of signs and perm sends the odd labels
/// e_{2j-1} to the canonical basis.
struct P2Factorization {
  TQFTParameter param;
  int p;
  std::vector<PhaseExponent> left_diag;   ///< A^(p(j - j^2))
  Eigen::MatrixXi middle;                 ///< (-1)^(i-j) for j <= i, else 0
  std::vector<PhaseExponent> right_diag;  ///< A^(p(i^2 - 1))
  std::vector<int> perm;                  ///< odd_basis_permutation

  /// perm * diag(left) * middle * diag(right), in exact arithmetic.
  ExactMatrix compose() const;
};

P2Factorization p2_factorization(const TQFTParameter& param, int p);

/// diag(A^(p(1-i^2))) * (upper bidiagonal of ones) * diag(A^(p(j^2-j))),
/// followed by the inverse permutation back to canonical labels.
CablingOperator p2_inverse(const TQFTParameter& param, int p);

/// Upper triangle with entries (-1)^(i-j) on and above the diagonal.
Eigen::MatrixXi alternating_triangle(int m);
/// Ones on the diagonal and the first superdiagonal.
Eigen::MatrixXi bidiagonal_ones(int m);

/// Numeric product M * v.
template <typename Real>
TQFTVector<Real> apply(const CablingOperator& op, const TQFTVector<Real>& v) {
  if (v.size() != op.dimension()) throw ValidationError("apply: dimension mismatch");
  return op.numeric<Real>() * v;
}

/// RT vector of M' = C_{p,q} glued along the boundary of M, given v = RT(M).
///
/// The coefficient of e_i in RT(M') is the pairing of RT(M) with the image of
/// e_i under the cabling map, so M' receives the transpose action.
template <typename Real>
TQFTVector<Real> cable_vector(const CablingOperator& op, const TQFTVector<Real>& v) {
  if (v.size() != op.dimension()) throw ValidationError("cable_vector: dimension mismatch");
  return op.numeric<Real>().transpose() * v;
}

}  // namespace tvcable
