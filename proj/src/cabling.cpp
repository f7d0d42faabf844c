#include "tvcable/cabling.hpp"

#include <numeric>
#include <string>

namespace tvcable {
namespace {

void require_coprime(int p, int q) {
  if (q < 1) throw ValidationError("cabling requires q >= 1");
  if (std::gcd(p, q) != 1) {
    throw ValidationError("cabling requires coprime (p,q), got (" + std::to_string(p) + "," +
                          std::to_string(q) + ")");
  }
}

void require_odd(int p) {
  if (p % 2 == 0) throw ValidationError("p must be odd, got " + std::to_string(p));
}

std::int64_t wide_mod(__int128 value, std::int64_t modulus) {
  __int128 rem = value % modulus;
  if (rem < 0) rem += modulus;
  return static_cast<std::int64_t>(rem);
}

ExactMatrix diagonal(const TQFTParameter& param, const std::vector<PhaseExponent>& diag) {
  ExactMatrix out(param.r(), param.m(), param.m());
  for (int i = 0; i < param.m(); ++i) out(i, i) = PhaseSum::monomial(diag[i]);
  return out;
}

ExactMatrix from_signs(const TQFTParameter& param, const Eigen::MatrixXi& signs) {
  ExactMatrix out(param.r(), static_cast<int>(signs.rows()), static_cast<int>(signs.cols()));
  for (int j = 0; j < signs.cols(); ++j)
    for (int i = 0; i < signs.rows(); ++i)
      if (signs(i, j) != 0) out(i, j).add(0, signs(i, j));
  return out;
}

}  // namespace

ColorSet color_set(int i) {
  if (i < 1) throw ValidationError("color must be >= 1");
  ColorSet set{i, {}};
  set.half_units.reserve(i);
  for (int k = -(i - 1); k <= i - 1; k += 2) set.half_units.push_back(k);
  return set;
}

namespace {

ExactVector scaled_column(const TQFTParameter& param, int p, int q, int i, int phase_scale) {
  require_coprime(p, q);
  if (i < 1 || i > param.m()) throw ValidationError("color out of range [1, m]");
  const std::int64_t modulus = 4 * std::int64_t{param.r()};
  ExactVector column(param.m(), PhaseSum(param.r()));
  // With k = kappa/2, the exponent of A in half-units is
  //   pq(i^2-1) - p kappa (q kappa + 2)  and the target label is q kappa + 1.
  const __int128 prefactor = __int128{p} * q * (__int128{i} * i - 1);
  for (int kappa : color_set(i).half_units) {
    const __int128 half_units = phase_scale * (prefactor - __int128{p} * kappa * (__int128{q} * kappa + 2));
    const ReducedBasisIndex target = reduce_index(param, std::int64_t{q} * kappa + 1);
    if (target.sign == 0) continue;
    column[target.index - 1].add(wide_mod(half_units, modulus), target.sign);
  }
  return column;
}

}  // namespace

ExactVector cable_column(const TQFTParameter& param, int p, int q, int i) { return scaled_column(param, p, q, i, 1); }

CablingOperator::CablingOperator(TQFTParameter param, int p, int q, ExactMatrix entries, bool inverse)
    : param_(param), p_(p), q_(q), inverse_(inverse), entries_(std::move(entries)) {}

CablingOperator cabling_matrix(const TQFTParameter& param, int p, int q) {
  require_coprime(p, q);
  const int m = param.m();
  ExactMatrix entries(param.r(), m, m);
  for (int i = 1; i <= m; ++i) {
    ExactVector column = cable_column(param, p, q, i);
    for (int j = 0; j < m; ++j) {
      if (q == 2) {
        for (const PhaseTerm& t : column[j].terms()) {
          if (t.half_units % 2 != 0) throw std::logic_error("(p,2) cabling produced a half-integer power of A");
        }
      }
      entries(j, i - 1) = std::move(column[j]);
    }
  }
  return CablingOperator(param, p, q, std::move(entries));
}

CablingOperator gluing_matrix(const TQFTParameter& param, int p, int q) {
  require_coprime(p, q);
  const int m = param.m();
  ExactMatrix entries(param.r(), m, m);
  for (int i = 1; i <= m; ++i) {
    ExactVector column = scaled_column(param, p, q, i, 2);
    for (int j = 0; j < m; ++j) entries(j, i - 1) = std::move(column[j]);
  }
  return CablingOperator(param, p, q, std::move(entries));
}

Eigen::MatrixXi alternating_triangle(int m) {
  Eigen::MatrixXi t = Eigen::MatrixXi::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) t(j, i) = (i - j) % 2 == 0 ? 1 : -1;
  return t;
}

Eigen::MatrixXi bidiagonal_ones(int m) {
  Eigen::MatrixXi b = Eigen::MatrixXi::Identity(m, m);
  for (int i = 0; i + 1 < m; ++i) b(i, i + 1) = 1;
  return b;
}

P2Factorization p2_factorization(const TQFTParameter& param, int p) {
  require_odd(p);
  const int m = param.m();
  P2Factorization f{param, p, {}, alternating_triangle(m), {}, odd_basis_permutation(param)};
  f.left_diag.reserve(m);
  f.right_diag.reserve(m);
  const std::int64_t period = 2 * std::int64_t{param.r()};
  for (std::int64_t j = 1; j <= m; ++j) {
    f.left_diag.push_back(PhaseExponent::power_of_a(param, wide_mod(__int128{p} * (j - j * j), period)));
    f.right_diag.push_back(PhaseExponent::power_of_a(param, wide_mod(__int128{p} * (j * j - 1), period)));
  }
  return f;
}

ExactMatrix P2Factorization::compose() const {
  const int m = param.m();
  ExactMatrix permutation(param.r(), m, m);
  for (int j = 0; j < m; ++j) permutation(perm[j] - 1, j) = PhaseSum::one(param.r());
  return permutation * diagonal(param, left_diag) * from_signs(param, middle) * diagonal(param, right_diag);
}

CablingOperator p2_inverse(const TQFTParameter& param, int p) {
  const P2Factorization f = p2_factorization(param, p);
  const int m = param.m();
  std::vector<PhaseExponent> right_inv, left_inv;
  for (int i = 0; i < m; ++i) {
    right_inv.push_back(-f.right_diag[i]);
    left_inv.push_back(-f.left_diag[i]);
  }
  ExactMatrix unpermute(param.r(), m, m);
  for (int j = 0; j < m; ++j) unpermute(j, f.perm[j] - 1) = PhaseSum::one(param.r());
  ExactMatrix entries =
      diagonal(param, right_inv) * from_signs(param, bidiagonal_ones(m)) * diagonal(param, left_inv) * unpermute;
  return CablingOperator(param, p, 2, std::move(entries), /*inverse=*/true);
}

}  // namespace tvcable
