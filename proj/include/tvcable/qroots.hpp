#pragma once

#include <cstdint>

#include "tvcable/scalar.hpp"

namespace tvcable {

/// Odd level r >= 3 of the SO(3) theory at A = exp(i*pi/r), together with the
/// working precision used for numeric evaluation.
class TQFTParameter {
 public:
  explicit TQFTParameter(int r, int precision_bits = kDoubleBits);

  int r() const noexcept { return r_; }
  /// Number of colors, (r - 1) / 2.
  int m() const noexcept { return (r_ - 1) / 2; }
  int precision() const noexcept { return precision_; }

  TQFTParameter with_precision(int bits) const { return TQFTParameter(r_, bits); }

  friend bool operator==(const TQFTParameter&, const TQFTParameter&) = default;

 private:
  int r_;
  int precision_;
};

/// Exact phase A^(n/2) = exp(i*pi*n/(2r)), with n kept in [0, 4r).
class PhaseExponent {
 public:
  PhaseExponent(const TQFTParameter& param, std::int64_t half_units);

  /// A^exponent for an integer exponent.
  static PhaseExponent power_of_a(const TQFTParameter& param, std::int64_t exponent);

  std::int64_t half_units() const noexcept { return half_units_; }
  int level() const noexcept { return level_; }

  PhaseExponent operator+(const PhaseExponent& other) const;
  PhaseExponent operator-(const PhaseExponent& other) const;
  PhaseExponent operator-() const;

  friend bool operator==(const PhaseExponent&, const PhaseExponent&) = default;

 private:
  PhaseExponent(int level, std::int64_t half_units);

  int level_;
  std::int64_t half_units_;
};

/// Floor modulus: result in [0, modulus) for positive modulus.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t modulus) {
  const std::int64_t rem = a % modulus;
  return rem < 0 ? rem + modulus : rem;
}

template <typename Real>
Complex<Real> phase(const TQFTParameter& param, const PhaseExponent& e) {
  using std::cos;
  using std::sin;
  const Real angle = pi<Real>() * Real(e.half_units()) / Real(2 * param.r());
  return Complex<Real>(cos(angle), sin(angle));
}

/// [n] = sin(2 pi n / r) / sin(2 pi / r). The argument is reduced mod r
/// before evaluation so that [n + r] == [n] holds bit for bit.
template <typename Real>
Real quantum_integer(const TQFTParameter& param, std::int64_t n) {
  using std::sin;
  const std::int64_t reduced = floor_mod(n, param.r());
  const Real step = 2 * pi<Real>() / Real(param.r());
  return sin(step * Real(reduced)) / sin(step);
}

/// Value of the unknot colored by the (n-1)-th Jones-Wenzl idempotent,
/// (-1)^(n-1) [n].
template <typename Real>
Real loop_value(const TQFTParameter& param, std::int64_t n) {
  if (n <= 0) throw ValidationError("loop_value requires n >= 1");
  const Real q = quantum_integer<Real>(param, n);
  return (n - 1) % 2 == 0 ? q : Real(-q);
}

/// RT invariant of the 3-sphere with sqrt(-r) = i sqrt(r); positive.
template <typename Real>
Real eta(const TQFTParameter& param) {
  using std::sin;
  using std::sqrt;
  const Real r(param.r());
  return 2 * sin(2 * pi<Real>() / r) / sqrt(r);
}

}  // namespace tvcable
