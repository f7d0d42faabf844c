#pragma once

#include <complex>
#include <limits>
#include <type_traits>

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "tvcable/errors.hpp"

namespace tvcable {

/// 113-bit binary float; the extended working precision.
using Quad = boost::multiprecision::cpp_bin_float_quad;

template <typename Real>
struct complex_of {
  using type = std::complex<Real>;
};
template <>
struct complex_of<Quad> {
  using type = boost::multiprecision::cpp_complex_quad;
};

template <typename Real>
using Complex = typename complex_of<Real>::type;

template <typename Real>
using VectorX = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using MatrixX = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
inline Real pi() {
  return boost::math::constants::pi<Real>();
}

template <typename Real>
inline double to_double(const Real& x) {
  return static_cast<double>(x);
}

template <typename Real>
inline std::complex<double> to_complex_double(const Complex<Real>& z) {
  using std::imag;
  using std::real;
  return {static_cast<double>(real(z)), static_cast<double>(imag(z))};
}

/// Mantissa width of each supported working precision.
inline constexpr int kDoubleBits = std::numeric_limits<double>::digits;
inline constexpr int kLongDoubleBits = std::numeric_limits<long double>::digits;
inline constexpr int kQuadBits = std::numeric_limits<Quad>::digits;

/// Calls `f(std::type_identity<Real>{})` with the narrowest supported scalar
/// carrying at least `bits` bits of mantissa.
template <typename F>
auto visit_precision(int bits, F&& f) {
  if (bits <= kDoubleBits) return f(std::type_identity<double>{});
  if (bits <= kLongDoubleBits) return f(std::type_identity<long double>{});
  if (bits <= kQuadBits) return f(std::type_identity<Quad>{});
  throw ValidationError("precision above " + std::to_string(kQuadBits) +
                        " bits is not supported");
}

}  // namespace tvcable
