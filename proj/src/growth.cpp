#include "tvcable/growth.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

namespace tvcable {
namespace {

/// Evaluates fn(0..count-1) on up to `jobs` threads; results keep index order.
template <typename Fn>
auto parallel_map(int count, int jobs, Fn fn) {
  using Result = decltype(fn(0));
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, std::max(count, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<Result> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

std::vector<int> odd_levels(int r_min, int r_max) {
  if (r_min < 3 || r_max < r_min) throw ValidationError("level range must satisfy 3 <= r_min <= r_max");
  std::vector<int> levels;
  for (int r = r_min + (r_min % 2 == 0 ? 1 : 0); r <= r_max; r += 2) levels.push_back(r);
  return levels;
}

std::optional<double> growth_rate(int r, double log_tv) {
  if (!std::isfinite(log_tv)) return std::nullopt;
  return 2 * std::numbers::pi / r * log_tv;
}

}  // namespace

GrowthPoint growth_point(const TQFTParameter& param, const KnotSpec& spec) {
  const TuraevViroValue value = turaev_viro_value(param, spec);
  return {param.r(), value.tv, growth_rate(param.r(), value.log_tv)};
}

std::optional<PowerFit> fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) return std::nullopt;
  const double slope = sxy / sxx;
  return PowerFit{slope, my - slope * mx};
}

double rank_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> order(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(v.size());
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
      const double average = 0.5 * static_cast<double>(i + j) + 1.0;
      for (std::size_t k = i; k <= j; ++k) rank[order[k]] = average;
      i = j + 1;
    }
    return rank;
  };
  if (x.size() != y.size() || x.size() < 2) throw ValidationError("rank_correlation needs two equal-length series");
  const std::vector<double> rx = ranks(x), ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1) / 2;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

GrowthSeries scan(const KnotSpec& spec, const ScanOptions& options) {
  validate(spec);
  const std::vector<int> levels = odd_levels(options.r_min, options.r_max);
  struct Evaluated {
    GrowthPoint point;
    bool mismatch;
  };
  const auto evaluated = parallel_map(static_cast<int>(levels.size()), options.jobs, [&](int index) {
    const TQFTParameter param(levels[index], options.precision);
    GrowthPoint point = growth_point(param, spec);
    bool mismatch = false;
    if (param.r() > kCrossCheckLevel && param.precision() < kCrossCheckBits) {
      const GrowthPoint extended = growth_point(param.with_precision(kCrossCheckBits), spec);
      const double scale = std::max(std::abs(extended.tv), std::numeric_limits<double>::min());
      mismatch = std::abs(extended.tv - point.tv) > kCrossCheckTolerance * scale;
      point = extended;
    }
    return Evaluated{point, mismatch};
  });

  GrowthSeries series{to_string(spec), {}, std::nullopt, std::nullopt, {}};
  for (const Evaluated& e : evaluated) {
    series.points.push_back(e.point);
    if (e.mismatch) series.precision_mismatches.push_back(e.point.r);
  }

  std::vector<double> log_r, log_tv;
  for (std::size_t i = series.points.size() / 2; i < series.points.size(); ++i) {
    const GrowthPoint& pt = series.points[i];
    if (!pt.f) continue;
    log_r.push_back(std::log(pt.r));
    log_tv.push_back(*pt.f * pt.r / (2 * std::numbers::pi));
    series.ltv_estimate = std::max(series.ltv_estimate.value_or(*pt.f), *pt.f);
  }
  series.fit = fit_power_law(log_r, log_tv);
  return series;
}

SandwichReport sandwich_check(const KnotSpec& spec, int p, int r_min, int r_max, int precision, int jobs) {
  validate(spec);
  const KnotSpec cabled = KnotSpec::cable(p, spec);
  const std::vector<int> levels = odd_levels(r_min, r_max);
  constexpr double kSlack = 1e-9;
  SandwichReport report{to_string(spec), p, {}, std::nullopt, true};
  report.rows = parallel_map(static_cast<int>(levels.size()), jobs, [&](int index) {
    const TQFTParameter param(levels[index], precision);
    const TuraevViroValue inner = turaev_viro_value(param, spec);
    const TuraevViroValue outer = turaev_viro_value(param, cabled);
    const double m = param.m();
    SandwichRow row{param.r(), inner.tv, outer.tv, std::nullopt, 0.25, m * m, false};
    if (inner.tv > 0 && std::isfinite(inner.log_tv)) {
      const double ratio = std::exp(outer.log_tv - inner.log_tv);
      row.ratio = ratio;
      row.pass = row.lower - kSlack <= ratio && ratio <= row.upper + kSlack;
    }
    return row;
  });
  std::vector<double> log_r, log_ratio;
  for (const SandwichRow& row : report.rows) {
    if (!row.ratio) continue;  // zero denominator: flagged, excluded from the fit
    report.all_pass = report.all_pass && row.pass;
    if (*row.ratio > 0) {
      log_r.push_back(std::log(row.r));
      log_ratio.push_back(std::log(*row.ratio));
    }
  }
  if (const auto fit = fit_power_law(log_r, log_ratio)) report.exponent = fit->exponent;
  return report;
}

NormReport norm_scan(int p, int r_max, const NormOptions& options, int jobs) {
  if (p % 2 == 0) throw ValidationError("norm scan needs odd p");
  const std::vector<int> levels = odd_levels(3, r_max);
  NormReport report{p, {}, true};
  report.rows = parallel_map(static_cast<int>(levels.size()), jobs, [&](int index) {
    const TQFTParameter param(levels[index]);
    NormRow row{param.r(), 0.0, 0.0, false, {}};
    try {
      row.norm = operator_norm(cabling_matrix(param, p, 2).numeric<double>(), options);
      row.inverse_norm = operator_norm(p2_inverse(param, p).numeric<double>(), options);
      row.pass = row.norm <= param.m() && row.inverse_norm <= 2.0;
    } catch (const NormError& e) {
      row.error = e.what();
    }
    return row;
  });
  for (const NormRow& row : report.rows) report.all_pass = report.all_pass && row.pass;
  return report;
}

double lobachevsky(double theta) {
  // Lobachevsky(theta) = Cl2(2 theta) / 2, with the Clausen function from
  //   Cl2(x) = x - x log|x| + sum_n zeta(2n) / (n (2n+1)) x^(2n+1) / (2 pi)^(2n),  |x| < 2 pi.
  const double two_pi = 2 * std::numbers::pi;
  double x = std::remainder(2 * theta, two_pi);
  if (x == 0) return 0.0;
  double sum = x - x * std::log(std::abs(x));
  const double ratio = (x / two_pi) * (x / two_pi);
  double power = x;
  for (int n = 1; n < 200; ++n) {
    power *= ratio;
    const double term = std::riemann_zeta(2.0 * n) / (n * (2.0 * n + 1)) * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return 0.5 * sum;
}

double figure_eight_volume() { return 6 * lobachevsky(std::numbers::pi / 3); }

std::string format_double(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

std::string to_csv(const GrowthSeries& series) {
  std::string out = "r,tv,f\n";
  for (const GrowthPoint& pt : series.points) {
    out += std::to_string(pt.r) + "," + format_double(pt.tv) + ",";
    if (pt.f) out += format_double(*pt.f);
    out += "\n";
  }
  return out;
}

nlohmann::json to_json(const GrowthSeries& series) {
  nlohmann::json points = nlohmann::json::array();
  for (const GrowthPoint& pt : series.points) {
    points.push_back({{"r", pt.r}, {"tv", pt.tv}, {"f", pt.f ? nlohmann::json(*pt.f) : nlohmann::json(nullptr)}});
  }
  nlohmann::json fit = nullptr;
  if (series.fit) fit = {{"N", series.fit->exponent}, {"logB", series.fit->log_coefficient}};
  return {{"knot", series.knot},
          {"points", points},
          {"fit", fit},
          {"ltv_estimate", series.ltv_estimate ? nlohmann::json(*series.ltv_estimate) : nlohmann::json(nullptr)}};
}

std::string to_csv(const SandwichReport& report) {
  std::string out = "r,tv,tv_cabled,ratio,lower,upper,verdict\n";
  for (const SandwichRow& row : report.rows) {
    out += std::to_string(row.r) + "," + format_double(row.tv) + "," + format_double(row.tv_cabled) + ",";
    if (row.ratio) out += format_double(*row.ratio);
    out += "," + format_double(row.lower) + "," + format_double(row.upper) + ",";
    out += row.ratio ? (row.pass ? "PASS" : "FAIL") : "ZERO";
    out += "\n";
  }
  return out;
}

}  // namespace tvcable
