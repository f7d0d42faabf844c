#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvcable/qroots.hpp"

namespace tvcable {

struct PhaseTerm {
  std::int64_t half_units;  ///< in [0, 2r)
  std::int64_t coefficient;  ///< nonzero

  friend bool operator==(const PhaseTerm&, const PhaseTerm&) = default;
};

/// Formal integer combination of phases A^(n/2).
///
/// Canonical form: exponents are folded into [0, 2r) using A^r = -1, terms
/// with equal exponent are merged, zero coefficients are dropped and the
/// remaining terms are sorted. Two sums compare equal iff their canonical
/// term lists agree, so identities checked with `==` hold with zero tolerance.
class PhaseSum {
 public:
  explicit PhaseSum(int level) : level_(level) {}

  static PhaseSum monomial(const PhaseExponent& e, std::int64_t coefficient = 1);
  static PhaseSum one(int level);

  int level() const noexcept { return level_; }
  const std::vector<PhaseTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;
  std::optional<PhaseTerm> single_term() const;

  /// Adds coefficient * A^(half_units/2); `half_units` may be any integer.
  void add(std::int64_t half_units, std::int64_t coefficient);
  void add(const PhaseExponent& e, std::int64_t coefficient) { add(e.half_units(), coefficient); }

  PhaseSum& operator+=(const PhaseSum& other);
  PhaseSum& operator-=(const PhaseSum& other);
  PhaseSum operator-() const;
  friend PhaseSum operator+(PhaseSum a, const PhaseSum& b) { return a += b; }
  friend PhaseSum operator-(PhaseSum a, const PhaseSum& b) { return a -= b; }
  friend PhaseSum operator*(const PhaseSum& a, const PhaseSum& b);

  friend bool operator==(const PhaseSum&, const PhaseSum&) = default;

  /// `table[n]` must hold A^(n/2) for n in [0, 2r).
  template <typename Real>
  Complex<Real> evaluate(const std::vector<Complex<Real>>& table) const {
    Complex<Real> sum(0);
    for (const PhaseTerm& t : terms_) sum += table[t.half_units] * Real(t.coefficient);
    return sum;
  }

  /// Human-readable form such as "-A^3 + A^(1/2)".
  std::string to_string() const;

 private:
  int level_;
  std::vector<PhaseTerm> terms_;
};

/// A^(n/2) for n in [0, 2r).
template <typename Real>
std::vector<Complex<Real>> phase_table(const TQFTParameter& param) {
  std::vector<Complex<Real>> table;
  table.reserve(2 * param.r());
  for (int n = 0; n < 2 * param.r(); ++n) table.push_back(phase<Real>(param, PhaseExponent(param, n)));
  return table;
}

/// Dense matrix of phase sums, column-major, zero-based.
class ExactMatrix {
 public:
  ExactMatrix(int level, int rows, int cols);

  static ExactMatrix identity(int level, int n);

  int level() const noexcept { return level_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  PhaseSum& operator()(int row, int col) { return entries_[index(row, col)]; }
  const PhaseSum& operator()(int row, int col) const { return entries_[index(row, col)]; }

  /// Skips zero entries, so products with sparse factors stay cheap.
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  bool is_identity() const;
  std::size_t nonzeros() const;

  template <typename Real>
  MatrixX<Real> numeric(const TQFTParameter& param) const {
    const auto table = phase_table<Real>(param);
    MatrixX<Real> out(rows_, cols_);
    for (int j = 0; j < cols_; ++j)
      for (int i = 0; i < rows_; ++i) out(i, j) = (*this)(i, j).evaluate<Real>(table);
    return out;
  }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(col) * rows_ + row;
  }

  int level_;
  int rows_;
  int cols_;
  std::vector<PhaseSum> entries_;
};

}  // namespace tvcable
