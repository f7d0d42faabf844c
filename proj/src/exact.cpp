#include "tvcable/exact.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace tvcable {

PhaseSum PhaseSum::monomial(const PhaseExponent& e, std::int64_t coefficient) {
  PhaseSum s(e.level());
  s.add(e, coefficient);
  return s;
}

PhaseSum PhaseSum::one(int level) {
  PhaseSum s(level);
  s.add(0, 1);
  return s;
}

bool PhaseSum::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].half_units == 0 && terms_[0].coefficient == 1;
}

std::optional<PhaseTerm> PhaseSum::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_[0];
}

void PhaseSum::add(std::int64_t half_units, std::int64_t coefficient) {
  if (coefficient == 0) return;
  const std::int64_t half_turn = 2 * std::int64_t{level_};
  std::int64_t n = floor_mod(half_units, 2 * half_turn);
  if (n >= half_turn) {
    n -= half_turn;
    coefficient = -coefficient;
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                             [](const PhaseTerm& t, std::int64_t v) { return t.half_units < v; });
  if (it != terms_.end() && it->half_units == n) {
    it->coefficient += coefficient;
    if (it->coefficient == 0) terms_.erase(it);
  } else {
    terms_.insert(it, PhaseTerm{n, coefficient});
  }
}

PhaseSum& PhaseSum::operator+=(const PhaseSum& other) {
  assert(other.level_ == level_);
  for (const PhaseTerm& t : other.terms_) add(t.half_units, t.coefficient);
  return *this;
}

PhaseSum& PhaseSum::operator-=(const PhaseSum& other) {
  assert(other.level_ == level_);
  for (const PhaseTerm& t : other.terms_) add(t.half_units, -t.coefficient);
  return *this;
}

PhaseSum PhaseSum::operator-() const {
  PhaseSum out(*this);
  for (PhaseTerm& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

PhaseSum operator*(const PhaseSum& a, const PhaseSum& b) {
  assert(a.level_ == b.level_);
  PhaseSum out(a.level_);
  for (const PhaseTerm& x : a.terms_)
    for (const PhaseTerm& y : b.terms_) out.add(x.half_units + y.half_units, x.coefficient * y.coefficient);
  return out;
}

std::string PhaseSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const PhaseTerm& t : terms_) {
    std::int64_t c = t.coefficient;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = c < 0 ? -c : c;
    first = false;
    if (t.half_units == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << "A";
    if (t.half_units % 2 == 0) {
      if (t.half_units != 2) os << '^' << t.half_units / 2;
    } else {
      os << "^(" << t.half_units << "/2)";
    }
  }
  return os.str();
}

ExactMatrix::ExactMatrix(int level, int rows, int cols)
    : level_(level),
      rows_(rows),
      cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, PhaseSum(level)) {}

ExactMatrix ExactMatrix::identity(int level, int n) {
  ExactMatrix id(level, n, n);
  for (int i = 0; i < n; ++i) id(i, i) = PhaseSum::one(level);
  return id;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  assert(a.cols_ == b.rows_ && a.level_ == b.level_);
  ExactMatrix out(a.level_, a.rows_, b.cols_);
  for (int j = 0; j < b.cols_; ++j) {
    for (int k = 0; k < b.rows_; ++k) {
      const PhaseSum& right = b(k, j);
      if (right.is_zero()) continue;
      for (int i = 0; i < a.rows_; ++i) {
        const PhaseSum& left = a(i, k);
        if (left.is_zero()) continue;
        out(i, j) += left * right;
      }
    }
  }
  return out;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) {
      const PhaseSum& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

std::size_t ExactMatrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const PhaseSum& e) { return !e.is_zero(); }));
}

}  // namespace tvcable
