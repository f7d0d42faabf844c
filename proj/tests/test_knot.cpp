#include <random>

#include "doctest.h"
#include "tvcable/knot.hpp"

using namespace tvcable;

TEST_CASE("knot spec grammar") {
  for (const char* text : {"unknot", "figure8", "torus:3,2", "torus:-5,2", "cable:3:figure8",
                           "cable:3:cable:5:figure8", "cable:-1:torus:3,2"}) {
    CHECK(to_string(parse_knot_spec(text)) == text);
  }
  CHECK(to_string(parse_knot_spec("torus:+3,2")) == "torus:3,2");
  for (const char* bad : {"", "trefoil", "torus:3", "torus:4,2", "torus:3,0", "cable:2:figure8", "cable:3",
                          "cable:x:unknot", "cable:3:", "figure8 ", "torus:3,2x"}) {
    CHECK_THROWS_AS(parse_knot_spec(bad), ValidationError);
  }
  const KnotSpec nested = parse_knot_spec("cable:3:cable:5:figure8");
  const auto& outer = std::get<Cable>(nested.node);
  CHECK(outer.p == 3);
  CHECK(std::get<Cable>(outer.inner->node).p == 5);
}

TEST_CASE("unknot vector") {
  const auto v3 = rt_vector<double>(TQFTParameter(3), KnotSpec::unknot());
  REQUIRE(v3.size() == 1);
  CHECK(v3(0).real() == doctest::Approx(1.0).epsilon(1e-15));
  const auto v5 = rt_vector<double>(TQFTParameter(5), KnotSpec::unknot());
  CHECK(v5(0).real() == doctest::Approx(0.8506508083520399).epsilon(1e-14));
  CHECK(v5(1).real() == doctest::Approx(-0.5257311121191336).epsilon(1e-14));
}

TEST_CASE("(1,2) torus knot is unknotted") {
  for (int r : {5, 7, 31, 101}) {
    const TQFTParameter param(r);
    CHECK(turaev_viro<double>(param, KnotSpec::torus(1, 2)) ==
          doctest::Approx(turaev_viro<double>(param, KnotSpec::unknot())).epsilon(1e-12));
    const auto a = rt_vector<double>(param, KnotSpec::torus(1, 2));
    const auto b = rt_vector<double>(param, KnotSpec::unknot());
    CHECK((a.cwiseAbs() - b.cwiseAbs()).norm() < 1e-12);
  }
}

TEST_CASE("figure-eight cyclotomic sum") {
  const TQFTParameter r5(5);
  CHECK(figure8_cyclotomic<double>(r5, 1) == 1.0);
  CHECK(figure8_cyclotomic<double>(r5, 2) == doctest::Approx(3.2360679774997897).epsilon(1e-14));
  CHECK_THROWS_AS(figure8_cyclotomic<double>(r5, 0), ValidationError);
  CHECK_THROWS_AS(figure8_cyclotomic<double>(r5, 3), ValidationError);
}

TEST_CASE("color 2 reproduces the Jones polynomial of the figure-eight") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  for (int trial = 0; trial < 20; ++trial) {
    const std::complex<double> s = std::polar(1.0, angle(rng));
    const std::complex<double> t = s * s;
    const std::complex<double> jones = t * t - t + 1.0 - 1.0 / t + 1.0 / (t * t);
    CHECK(std::abs(figure8_cyclotomic_at<double>(s, 2) - jones) < 1e-13);
  }
}

TEST_CASE("real and complex evaluations of the figure-eight sum agree") {
  // Errors are measured against the largest value of the sequence; small
  // colors sit on heavy cancellation at large r.
  for (int r : {5, 11, 51, 201}) {
    const TQFTParameter param(r);
    const std::complex<double> s = std::polar(1.0, 2 * M_PI / r);  // s = A^2
    double scale = 0, worst = 0;
    for (int n = 1; n <= param.m(); ++n) {
      const std::complex<double> z = figure8_cyclotomic_at<double>(s, n);
      const double x = figure8_cyclotomic<double>(param, n);
      scale = std::max(scale, std::abs(x));
      worst = std::max(worst, std::abs(z - x));
    }
    CHECK(worst <= 1e-11 * scale);
  }
}

TEST_CASE("Turaev-Viro examples") {
  for (int r = 3; r <= 501; r += 2) {
    CHECK(std::abs(turaev_viro<double>(TQFTParameter(r), KnotSpec::unknot()) - 1.0) <= 1e-9);
  }
  const TQFTParameter r5(5);
  CHECK(turaev_viro<double>(r5, KnotSpec::figure_eight()) == doctest::Approx(3.6180339887498948).epsilon(1e-13));
  const double inner = turaev_viro<double>(r5, KnotSpec::figure_eight());
  const double outer = turaev_viro<double>(r5, KnotSpec::cable(1, KnotSpec::figure_eight()));
  CHECK(outer / inner >= 0.25);
  CHECK(outer / inner <= 4.0);
  CHECK(turaev_viro<double>(r5, KnotSpec::torus(3, 2)) >= 0.0);
}

TEST_CASE("torus knot oracle") {
  for (int r : {5, 9, 23}) {
    const TQFTParameter param(r);
    CHECK(std::abs(torus_knot_oracle<double>(param, 3, 2, 1)) == doctest::Approx(eta<double>(param)).epsilon(1e-13));
  }
  // Colour 2 is [2] times the Jones polynomial t + t^3 - t^4 of the trefoil.
  for (int r : {5, 7, 13, 101}) {
    const TQFTParameter param(r);
    const std::complex<double> t = std::polar(1.0, 4 * M_PI / r);
    const double jones = std::abs(t + t * t * t - t * t * t * t);
    const double expected = eta<double>(param) * std::abs(loop_value<double>(param, 2)) * jones;
    CHECK(std::abs(torus_knot_oracle<double>(param, 3, 2, 2)) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK_THROWS_AS(torus_knot_oracle<double>(TQFTParameter(7), 4, 2, 1), ValidationError);
  CHECK_THROWS_AS(torus_knot_oracle<double>(TQFTParameter(7), 3, 2, 4), ValidationError);
}

TEST_CASE("operator route matches the oracle for torus knots") {
  for (int r : {5, 7, 15, 101}) {
    const TQFTParameter param(r);
    for (int p : {3, 5, 7, -3}) {
      const auto v = rt_vector<double>(param, KnotSpec::torus(p, 2));
      for (int n = 1; n <= param.m(); ++n) {
        CHECK(std::abs(std::abs(v(n - 1)) - std::abs(torus_knot_oracle<double>(param, p, 2, n))) <= 1e-9);
      }
    }
  }
}

TEST_CASE("cabling multiplies TV by at most m^2 and at least 1/4") {
  const std::vector<KnotSpec> specs{KnotSpec::unknot(), KnotSpec::figure_eight(), KnotSpec::torus(3, 2),
                                    parse_knot_spec("cable:5:figure8")};
  for (int r = 3; r <= 301; r += 14) {
    const TQFTParameter param(r);
    for (const KnotSpec& spec : specs) {
      const double inner = turaev_viro<double>(param, spec);
      for (int p : {1, 3, 5}) {
        const double outer = turaev_viro<double>(param, KnotSpec::cable(p, spec));
        CHECK(outer <= double(param.m()) * param.m() * inner * (1 + 1e-12));
        CHECK(outer >= inner / 4 * (1 - 1e-12));
      }
    }
  }
}

TEST_CASE("doubling the precision leaves TV unchanged") {
  for (int r : {51, 301, 1001}) {
    for (const char* text : {"figure8", "torus:3,2", "cable:3:figure8"}) {
      if (r == 1001 && std::string(text) != "figure8") continue;
      const KnotSpec spec = parse_knot_spec(text);
      const TuraevViroValue lo = turaev_viro_value(TQFTParameter(r, 53), spec);
      const TuraevViroValue hi = turaev_viro_value(TQFTParameter(r, 106), spec);
      CHECK(std::abs(lo.tv - hi.tv) <= 1e-8 * hi.tv);
    }
  }
  const TuraevViroValue ld = turaev_viro_value(TQFTParameter(77, 64), KnotSpec::figure_eight());
  CHECK(ld.tv == doctest::Approx(turaev_viro_value(TQFTParameter(77), KnotSpec::figure_eight()).tv).epsilon(1e-12));
}
