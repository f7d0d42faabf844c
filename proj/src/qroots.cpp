#include "tvcable/qroots.hpp"

#include <string>

namespace tvcable {

TQFTParameter::TQFTParameter(int r, int precision_bits) : r_(r), precision_(precision_bits) {
  if (r < 3 || r % 2 == 0) {
    throw ValidationError("level r must be odd and >= 3, got " + std::to_string(r));
  }
  if (precision_bits < kDoubleBits) {
    throw ValidationError("precision must be at least " + std::to_string(kDoubleBits) + " bits");
  }
  if (precision_bits > kQuadBits) {
    throw ValidationError("precision above " + std::to_string(kQuadBits) +
                          " bits is not supported");
  }
}

PhaseExponent::PhaseExponent(const TQFTParameter& param, std::int64_t half_units)
    : PhaseExponent(param.r(), half_units) {}

PhaseExponent::PhaseExponent(int level, std::int64_t half_units)
    : level_(level), half_units_(floor_mod(half_units, 4 * std::int64_t{level})) {}

PhaseExponent PhaseExponent::power_of_a(const TQFTParameter& param, std::int64_t exponent) {
  return PhaseExponent(param.r(), floor_mod(exponent, 2 * std::int64_t{param.r()}) * 2);
}

PhaseExponent PhaseExponent::operator+(const PhaseExponent& other) const {
  return PhaseExponent(level_, half_units_ + other.half_units_);
}

PhaseExponent PhaseExponent::operator-(const PhaseExponent& other) const {
  return PhaseExponent(level_, half_units_ - other.half_units_);
}

PhaseExponent PhaseExponent::operator-() const { return PhaseExponent(level_, -half_units_); }

}  // namespace tvcable
