#include <random>

#include "doctest.h"
#include "tvcable/qroots.hpp"

using namespace tvcable;

TEST_CASE("TQFTParameter validates the level and precision") {
  const TQFTParameter param(7);
  CHECK(param.r() == 7);
  CHECK(param.m() == 3);
  CHECK(param.precision() == 53);
  CHECK_THROWS_AS(TQFTParameter(4), ValidationError);
  CHECK_THROWS_AS(TQFTParameter(1), ValidationError);
  CHECK_THROWS_AS(TQFTParameter(-5), ValidationError);
  CHECK_THROWS_AS(TQFTParameter(5, 52), ValidationError);
  CHECK_THROWS_AS(TQFTParameter(5, 200), ValidationError);
  CHECK(TQFTParameter(5, 106).precision() == 106);
}

TEST_CASE("phase examples") {
  CHECK(phase<double>(TQFTParameter(3), PhaseExponent(TQFTParameter(3), 0)) == std::complex<double>(1, 0));

  const TQFTParameter r5(5);
  const auto a = phase<double>(r5, PhaseExponent(r5, 2));
  CHECK(a.real() == doctest::Approx(0.8090169943749474).epsilon(1e-15));
  CHECK(a.imag() == doctest::Approx(0.5877852522924731).epsilon(1e-15));

  const PhaseExponent full_turn(r5, 20);
  CHECK(full_turn == PhaseExponent(r5, 0));
  CHECK(full_turn.half_units() == 0);
  CHECK(phase<double>(r5, full_turn) == std::complex<double>(1, 0));
  CHECK(PhaseExponent::power_of_a(r5, -1).half_units() == 18);
}

TEST_CASE("phase group law and periodicity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> exponent(-100000, 100000);
  for (int r : {3, 5, 11, 101, 501}) {
    const TQFTParameter param(r);
    for (int trial = 0; trial < 200; ++trial) {
      const PhaseExponent a(param, exponent(rng)), b(param, exponent(rng));
      const auto lhs = phase<double>(param, a) * phase<double>(param, b);
      CHECK(std::abs(lhs - phase<double>(param, a + b)) <= 1e-12);
      CHECK(std::abs(std::abs(phase<double>(param, a)) - 1.0) <= 1e-15);
      const std::int64_t k = exponent(rng) % 50;
      CHECK(PhaseExponent(param, a.half_units() + 4 * r * k) == a);
      CHECK(a.half_units() >= 0);
      CHECK(a.half_units() < 4 * r);
    }
  }
}

TEST_CASE("quantum integers") {
  const TQFTParameter r5(5), r7(7);
  CHECK(quantum_integer<double>(r5, 1) == 1.0);
  CHECK(quantum_integer<double>(r5, 2) == doctest::Approx(0.6180339887498949).epsilon(1e-15));
  CHECK(quantum_integer<double>(r7, 7) == 0.0);
  CHECK(quantum_integer<double>(r5, -2) == doctest::Approx(-0.6180339887498949).epsilon(1e-15));
}

TEST_CASE("loop values") {
  const TQFTParameter r5(5);
  CHECK(loop_value<double>(TQFTParameter(9), 1) == 1.0);
  CHECK(loop_value<double>(r5, 2) == doctest::Approx(-0.6180339887498949).epsilon(1e-15));
  CHECK(loop_value<double>(r5, 7) == doctest::Approx(0.6180339887498949).epsilon(1e-15));
  CHECK(loop_value<double>(r5, 7) == -loop_value<double>(r5, 2));
  CHECK_THROWS_AS(loop_value<double>(r5, 0), ValidationError);
  CHECK_THROWS_AS(loop_value<double>(r5, -3), ValidationError);
}

TEST_CASE("shifting by r keeps [n] and flips the loop value") {
  for (int r = 3; r <= 61; r += 2) {
    const TQFTParameter param(r);
    for (int n = 1; n <= 4 * r; ++n) {
      CHECK(quantum_integer<double>(param, n + r) == quantum_integer<double>(param, n));
      CHECK(loop_value<double>(param, n + r) == -loop_value<double>(param, n));
    }
  }
}

TEST_CASE("eta") {
  CHECK(eta<double>(TQFTParameter(3)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eta<double>(TQFTParameter(5)) == doctest::Approx(0.8506508083520399).epsilon(1e-15));
  for (int r = 3; r <= 2001; r += 2) CHECK(eta<double>(TQFTParameter(r)) > 0.0);
}

TEST_CASE("global dimension: eta^2 * sum of squared loop values is 1") {
  for (int r = 3; r <= 501; r += 2) {
    const TQFTParameter param(r);
    double sum = 0;
    for (int i = 1; i <= param.m(); ++i) sum += loop_value<double>(param, i) * loop_value<double>(param, i);
    const double e = eta<double>(param);
    CHECK(std::abs(e * e * sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("extended precision agrees with double") {
  const TQFTParameter param(101, 113);
  const Quad e = eta<Quad>(param);
  CHECK(std::abs(to_double(e) - eta<double>(param)) <= 1e-15);
  const Complex<Quad> z = phase<Quad>(param, PhaseExponent(param, 37));
  CHECK(std::abs(to_complex_double<Quad>(z) - phase<double>(param, PhaseExponent(param, 37))) <= 1e-15);
  Quad sum = 0;
  for (int i = 1; i <= param.m(); ++i) sum += loop_value<Quad>(param, i) * loop_value<Quad>(param, i);
  CHECK(abs(e * e * sum - 1) < Quad("1e-30"));
}
