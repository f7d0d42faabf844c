#include "doctest.h"
#include "tvcable/exact.hpp"

using namespace tvcable;

TEST_CASE("phase sums fold A^r = -1 and merge terms") {
  const int r = 5;
  PhaseSum s(r);
  s.add(2 * r, 1);  // A^r
  CHECK(s == -PhaseSum::one(r));
  s.add(0, 1);
  CHECK(s.is_zero());

  PhaseSum t(r);
  t.add(6, 1);
  t.add(6 + 4 * r, 2);
  t.add(6 + 2 * r, 1);
  REQUIRE(t.single_term());
  CHECK(t.single_term()->half_units == 6);
  CHECK(t.single_term()->coefficient == 2);
}

TEST_CASE("phase sum products and printing") {
  const TQFTParameter param(5);
  const PhaseSum a = PhaseSum::monomial(PhaseExponent::power_of_a(param, 3), -1);
  const PhaseSum b = PhaseSum::monomial(PhaseExponent::power_of_a(param, 2));
  CHECK((a * b) == PhaseSum::monomial(PhaseExponent::power_of_a(param, 0), 1));  // -A^5 = 1
  CHECK(a.to_string() == "-A^3");
  CHECK(PhaseSum::monomial(PhaseExponent(param, 1)).to_string() == "A^(1/2)");
  CHECK(PhaseSum::monomial(PhaseExponent(param, 2)).to_string() == "A");
  CHECK(PhaseSum(5).to_string() == "0");
  CHECK((PhaseSum::one(5) + PhaseSum::monomial(PhaseExponent(param, 4), -2)).to_string() == "1 - 2A^2");
}

TEST_CASE("numeric evaluation matches the phase table") {
  const TQFTParameter param(7);
  PhaseSum s(7);
  s.add(3, 2);
  s.add(11, -1);
  const auto table = phase_table<double>(param);
  const auto expected = 2.0 * phase<double>(param, PhaseExponent(param, 3)) - phase<double>(param, PhaseExponent(param, 11));
  CHECK(std::abs(s.evaluate<double>(table) - expected) < 1e-14);
}

TEST_CASE("exact matrix product") {
  const TQFTParameter param(7);
  ExactMatrix a(7, 2, 2);
  a(0, 0) = PhaseSum::one(7);
  a(0, 1) = PhaseSum::monomial(PhaseExponent(param, 5), -1);
  a(1, 1) = PhaseSum::monomial(PhaseExponent(param, 9));
  ExactMatrix b(7, 2, 2);
  b(0, 0) = PhaseSum::one(7);
  b(0, 1) = PhaseSum::monomial(PhaseExponent(param, -4));
  b(1, 1) = PhaseSum::monomial(PhaseExponent(param, -9));
  CHECK((a * b).is_identity());
  CHECK((b * a).is_identity());
  CHECK(ExactMatrix::identity(7, 3).is_identity());
  CHECK(a.nonzeros() == 3);
  CHECK(!a.is_identity());
}
