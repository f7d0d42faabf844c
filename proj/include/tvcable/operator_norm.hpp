#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "tvcable/scalar.hpp"

namespace tvcable {

struct NormOptions {
  double tolerance = 1e-8;  ///< relative, on the norm
  int max_iterations = 10000;
};

struct NormResult {
  double norm = 0.0;
  int iterations = 0;
  int squarings = 0;
};

class NormError : public ComputationError {
 public:
  enum class Kind { NonConvergence, Overflow };

  NormError(Kind kind, const std::string& what) : ComputationError(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Largest singular value of `matrix`.
///
/// Power iteration on the Gram matrix G = M^H M from the all-ones vector,
/// tracking the Rayleigh quotient rho_k = x^H G x. The contraction of
/// successive changes of rho gives a geometric estimate of the remaining
/// error; iteration stops once that estimate is below the tolerance. When the
/// contraction is slow (close top eigenvalues) the iteration operator is
/// replaced by its square, which leaves the eigenvectors and the Rayleigh
/// quotient untouched but squares the contraction factor. Everything is
/// deterministic.
template <typename Derived>
NormResult operator_norm_detailed(const Eigen::MatrixBase<Derived>& matrix, const NormOptions& options = {}) {
  using Mat = Eigen::MatrixXcd;
  using Vec = Eigen::VectorXcd;
  const Mat m = matrix.template cast<std::complex<double>>();
  if (!m.allFinite()) throw NormError(NormError::Kind::Overflow, "operator_norm: non-finite matrix entry");
  NormResult result;
  if (m.size() == 0) return result;

  const Mat gram = m.adjoint() * m;
  const double scale = gram.norm();
  if (!std::isfinite(scale)) throw NormError(NormError::Kind::Overflow, "operator_norm: Gram matrix overflow");
  if (scale == 0.0) return result;

  Mat step = gram / scale;
  Vec x = Vec::Ones(m.cols()).normalized();
  auto rayleigh = [&](const Vec& v) { return (v.adjoint() * gram * v)(0, 0).real(); };

  double rho = rayleigh(x);
  double last_change = std::numeric_limits<double>::infinity();
  int since_squaring = 0;
  constexpr int kMaxSquarings = 40;
  constexpr double kRoundoff = 64 * std::numeric_limits<double>::epsilon();

  for (int it = 1; it <= options.max_iterations; ++it) {
    Vec y = step * x;
    const double ny = y.norm();
    if (!std::isfinite(ny)) throw NormError(NormError::Kind::Overflow, "operator_norm: iterate overflow");
    if (ny == 0.0) {
      // Start vector in the kernel of the iteration operator.
      throw NormError(NormError::Kind::NonConvergence, "operator_norm: iterate collapsed to zero");
    }
    x = y / ny;
    const double next = rayleigh(x);
    const double change = std::abs(next - rho);
    rho = next;
    result.iterations = it;
    ++since_squaring;

    if (change <= kRoundoff * rho) {
      result.norm = std::sqrt(rho);
      return result;
    }
    const double contraction = change / last_change;
    if (since_squaring >= 2 && contraction < 1.0) {
      const double remaining = change * contraction / (1.0 - contraction);
      if (remaining <= options.tolerance * rho) {
        result.norm = std::sqrt(rho);
        return result;
      }
    }
    last_change = change;
    if (since_squaring >= 3 && contraction > 0.5 && result.squarings < kMaxSquarings) {
      step = step * step;
      step = (0.5 * (step + step.adjoint())).eval();
      const double s = step.norm();
      if (s == 0.0 || !std::isfinite(s)) break;
      step /= s;
      ++result.squarings;
      since_squaring = 0;
      last_change = std::numeric_limits<double>::infinity();
    }
  }
  throw NormError(NormError::Kind::NonConvergence,
                  "operator_norm: no convergence within " + std::to_string(options.max_iterations) + " iterations");
}

template <typename Derived>
double operator_norm(const Eigen::MatrixBase<Derived>& matrix, const NormOptions& options = {}) {
  return operator_norm_detailed(matrix, options).norm;
}

}  // namespace tvcable
