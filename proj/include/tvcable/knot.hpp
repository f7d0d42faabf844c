#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>

#include "tvcable/cabling.hpp"

namespace tvcable {

struct KnotSpec;

struct Unknot {};
struct FigureEight {};
struct TorusKnot {
  int p;
  int q;
};
struct Cable {
  int p;
  std::shared_ptr<const KnotSpec> inner;
};

/// Knot whose complement is evaluated. Grammar:
///   unknot | figure8 | torus:p,q | cable:p:<spec>
struct KnotSpec {
  std::variant<Unknot, TorusKnot, FigureEight, Cable> node;

  static KnotSpec unknot() { return {Unknot{}}; }
  static KnotSpec figure_eight() { return {FigureEight{}}; }
  static KnotSpec torus(int p, int q);
  static KnotSpec cable(int p, KnotSpec inner);
};

/// Throws ValidationError on an unknown or malformed spec, non-coprime torus
/// parameters, or an even cabling slope.
KnotSpec parse_knot_spec(std::string_view text);
std::string to_string(const KnotSpec& spec);
/// Re-checks the invariants of a spec that was built by hand.
void validate(const KnotSpec& spec);

/// Normalized colored Jones polynomial of the figure-eight knot in the
/// cyclotomic form
///   sum_{k=0}^{N-1} prod_{j=1}^{k} {N+j}{N-j},   {n} = s^n - s^-n,
/// with s = t^(1/2). Evaluated for an arbitrary unit `s`.
template <typename Real>
Complex<Real> figure8_cyclotomic_at(const Complex<Real>& s, int color) {
  auto power = [](Complex<Real> base, int n) {
    Complex<Real> out(1);
    for (; n > 0; n >>= 1, base *= base)
      if (n & 1) out *= base;
    return out;
  };
  Complex<Real> total(1);
  Complex<Real> product(1);
  for (int j = 1; j < color; ++j) {
    const Complex<Real> plus = power(s, color + j), minus = power(s, color - j);
    product *= (plus - Complex<Real>(1) / plus) * (minus - Complex<Real>(1) / minus);
    total += product;
  }
  return total;
}

/// The same sum at t = A^4, where every factor is the real number
/// -4 sin(2 pi (N-j)/r) sin(2 pi (N+j)/r).
template <typename Real>
Real figure8_cyclotomic(const TQFTParameter& param, int color) {
  if (color < 1 || color > param.m()) throw ValidationError("figure8_cyclotomic: color out of range [1, m]");
  using std::sin;
  const Real step = 2 * pi<Real>() / Real(param.r());
  Real total(1);
  Real product(1);
  for (int j = 1; j < color; ++j) {
    product *= Real(-4) * sin(step * Real(color - j)) * sin(step * Real(color + j));
    total += product;
  }
  return total;
}

namespace detail {

template <typename Real>
TQFTVector<Real> unknot_vector(const TQFTParameter& param) {
  const Real scale = eta<Real>(param);
  TQFTVector<Real> v(param.m());
  for (int i = 1; i <= param.m(); ++i) v(i - 1) = Complex<Real>(scale * loop_value<Real>(param, i));
  return v;
}

template <typename Real>
TQFTVector<Real> figure8_vector(const TQFTParameter& param) {
  const Real scale = eta<Real>(param);
  TQFTVector<Real> v(param.m());
  for (int i = 1; i <= param.m(); ++i)
    v(i - 1) = Complex<Real>(scale * loop_value<Real>(param, i) * figure8_cyclotomic<Real>(param, i));
  return v;
}

}  // namespace detail

/// RT vector of the knot complement in the basis e_1..e_m. Coordinates are
/// defined up to unit phases per color; only moduli and norms are meaningful.
template <typename Real>
TQFTVector<Real> rt_vector(const TQFTParameter& param, const KnotSpec& spec) {
  return std::visit(
      [&](const auto& node) -> TQFTVector<Real> {
        using Node = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<Node, Unknot>) {
          return detail::unknot_vector<Real>(param);
        } else if constexpr (std::is_same_v<Node, FigureEight>) {
          return detail::figure8_vector<Real>(param);
        } else if constexpr (std::is_same_v<Node, TorusKnot>) {
          return cable_vector<Real>(gluing_matrix(param, node.p, node.q), detail::unknot_vector<Real>(param));
        } else {
          if (node.p % 2 == 0) throw ValidationError("cable slope p must be odd");
          return cable_vector<Real>(gluing_matrix(param, node.p, 2), rt_vector<Real>(param, *node.inner));
        }
      },
      spec.node);
}

/// TV_r of the complement, as the squared Hermitian norm of its RT vector.
template <typename Real>
Real turaev_viro(const TQFTParameter& param, const KnotSpec& spec) {
  return hermitian_norm_squared<Real>(rt_vector<Real>(param, spec));
}

/// TV_r and its natural logarithm at the parameter's working precision. The
/// logarithm is taken before narrowing so it stays finite past double range.
struct TuraevViroValue {
  double tv;
  double log_tv;  ///< -inf when tv == 0
};

TuraevViroValue turaev_viro_value(const TQFTParameter& param, const KnotSpec& spec);

/// eta_r * J_N(T_{p,q}, A^4) by direct summation over S_N of the closed
/// cabling terms (phases at A^2), evaluating each unknot closure with its
/// unreduced label.
/// Used as an independent cross-check of the operator route.
template <typename Real>
Complex<Real> torus_knot_oracle(const TQFTParameter& param, int p, int q, int color) {
  if (q < 1 || std::gcd(p, q) != 1) throw ValidationError("torus_knot_oracle: (p,q) must be coprime with q >= 1");
  if (color < 1 || color > param.m()) throw ValidationError("torus_knot_oracle: color out of range [1, m]");
  using std::cos;
  using std::sin;
  const Real r(param.r());
  const Real base = pi<Real>() / (2 * r);  // angle of A^(1/2)
  auto unit = [&](long long half_units) {
    const long long period = 4LL * param.r();
    const Real angle = base * Real(((2 * half_units) % period + period) % period);
    return Complex<Real>(cos(angle), sin(angle));
  };
  Complex<Real> sum(0);
  for (long long kappa = -(color - 1); kappa <= color - 1; kappa += 2) {
    const long long label = q * kappa + 1;
    // (-1)^(label-1) [label], with [n] = sin(2 pi n / r) / sin(2 pi / r).
    Real closure = sin(2 * pi<Real>() * Real(label) / r) / sin(2 * pi<Real>() / r);
    if ((label - 1) % 2 != 0) closure = -closure;
    sum += unit(-static_cast<long long>(p) * kappa * (q * kappa + 2)) * closure;
  }
  const long long framing = static_cast<long long>(p) * q * (static_cast<long long>(color) * color - 1);
  return unit(framing) * sum * eta<Real>(param);
}

}  // namespace tvcable
