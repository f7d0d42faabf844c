#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tvcable/knot.hpp"
#include "tvcable/operator_norm.hpp"

namespace tvcable {

struct GrowthPoint {
  int r;
  double tv;
  std::optional<double> f;  ///< (2 pi / r) log TV_r; absent when TV_r == 0
};

/// Least-squares fit log y = exponent * log x + log_coefficient.
struct PowerFit {
  double exponent;
  double log_coefficient;
};

struct GrowthSeries {
  std::string knot;
  std::vector<GrowthPoint> points;
  std::optional<PowerFit> fit;          ///< log TV against log r, upper half of the range
  std::optional<double> ltv_estimate;   ///< max f over the upper half; an estimate, not a limit
  std::vector<int> precision_mismatches;  ///< r values where the extended-precision rerun disagreed
};

GrowthPoint growth_point(const TQFTParameter& param, const KnotSpec& spec);

struct ScanOptions {
  int r_min = 3;
  int r_max = 3;
  int precision = kDoubleBits;
  int jobs = 1;
};

/// Levels above this are recomputed at extended precision and compared.
inline constexpr int kCrossCheckLevel = 1200;
inline constexpr int kCrossCheckBits = 106;
inline constexpr double kCrossCheckTolerance = 1e-8;

/// One growth point per odd r in [r_min, r_max], in increasing r whatever the
/// number of workers.
GrowthSeries scan(const KnotSpec& spec, const ScanOptions& options);

std::optional<PowerFit> fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

/// Spearman rank correlation (average ranks for ties).
double rank_correlation(const std::vector<double>& x, const std::vector<double>& y);

struct SandwichRow {
  int r;
  double tv;
  double tv_cabled;
  std::optional<double> ratio;  ///< absent when tv == 0
  double lower;                 ///< 1/4
  double upper;                 ///< m^2
  bool pass;
};

struct SandwichReport {
  std::string knot;
  int p;
  std::vector<SandwichRow> rows;
  std::optional<double> exponent;  ///< slope of log ratio against log r
  bool all_pass;
};

/// Compares TV_r(cable:p:spec) with TV_r(spec) for odd r in [r_min, r_max].
SandwichReport sandwich_check(const KnotSpec& spec, int p, int r_min, int r_max, int precision = kDoubleBits,
                              int jobs = 1);

struct NormRow {
  int r;
  double norm;
  double inverse_norm;
  bool pass;
  std::string error;  ///< non-empty when the norm iteration failed
};

struct NormReport {
  int p;
  std::vector<NormRow> rows;
  bool all_pass;
};

/// |||M||| and |||M^-1||| of the (p,2) cabling map for odd r in [3, r_max],
/// checked against m and 2.
NormReport norm_scan(int p, int r_max, const NormOptions& options = {}, int jobs = 1);

/// Lobachevsky function -int_0^theta log|2 sin t| dt.
double lobachevsky(double theta);
/// Hyperbolic volume of the figure-eight complement, 6 * Lobachevsky(pi/3).
double figure_eight_volume();

/// 17 significant digits.
std::string format_double(double value);
std::string to_csv(const GrowthSeries& series);
nlohmann::json to_json(const GrowthSeries& series);
std::string to_csv(const SandwichReport& report);

}  // namespace tvcable
