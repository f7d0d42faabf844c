#include "tvcable/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tvcable/growth.hpp"

namespace tvcable {
namespace {

enum ExitCode { kOk = 0, kValidation = 1, kFailure = 2 };

nlohmann::json terms_json(const PhaseSum& entry) {
  nlohmann::json terms = nlohmann::json::array();
  for (const PhaseTerm& t : entry.terms()) terms.push_back({{"half_units", t.half_units}, {"coefficient", t.coefficient}});
  return terms;
}

void write_operator(const CablingOperator& op, const std::string& format, bool numeric, std::ostream& out) {
  const ExactMatrix& e = op.entries();
  const int m = op.dimension();
  Eigen::MatrixXcd values;
  if (numeric) values = op.numeric<double>();
  if (format == "csv") {
    out << "row,col,exact" << (numeric ? ",re,im" : "") << "\n";
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (e(i, j).is_zero()) continue;
        out << i + 1 << "," << j + 1 << "," << e(i, j).to_string();
        if (numeric) out << "," << format_double(values(i, j).real()) << "," << format_double(values(i, j).imag());
        out << "\n";
      }
    return;
  }
  nlohmann::json doc{{"r", op.parameter().r()}, {"m", m},       {"p", op.p()},
                     {"q", op.q()},             {"inverse", op.is_inverse()}};
  nlohmann::json display = nlohmann::json::array(), terms = nlohmann::json::array(), num = nlohmann::json::array();
  for (int i = 0; i < m; ++i) {
    nlohmann::json drow = nlohmann::json::array(), trow = nlohmann::json::array(), nrow = nlohmann::json::array();
    for (int j = 0; j < m; ++j) {
      drow.push_back(e(i, j).to_string());
      trow.push_back(terms_json(e(i, j)));
      if (numeric) nrow.push_back({values(i, j).real(), values(i, j).imag()});
    }
    display.push_back(drow);
    terms.push_back(trow);
    if (numeric) num.push_back(nrow);
  }
  doc["display"] = display;
  doc["entries"] = terms;
  if (numeric) doc["numeric"] = num;
  out << doc.dump(2) << "\n";
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  if (values.empty()) throw ValidationError("empty list");
  return values;
}

void emit(const std::string& payload, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file '" + path + "'");
  file << payload;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"SO(3) Turaev-Viro invariants of knot complements and the (p,2) cabling map"};
  app.require_subcommand(1);

  int r = 0, p = 0, q = 2, r_max = 0, r_min = 3, jobs = 1, prec = kDoubleBits;
  std::string format, knot, out_path, p_list;
  bool numeric = false;
  double tol = 1e-8;

  auto* matrix = app.add_subcommand("matrix", "exact matrix of the (p,q) cabling map");
  matrix->add_option("--r", r, "odd level")->required();
  matrix->add_option("--p", p)->required();
  matrix->add_option("--q", q)->capture_default_str();
  matrix->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  matrix->add_flag("--numeric", numeric, "include complex values");

  auto* verify = app.add_subcommand("verify-factorization", "exact check of the (p,2) factorization and inverse");
  verify->add_option("--r-max", r_max)->required();
  verify->add_option("--p-list", p_list)->required();

  auto* inverse = app.add_subcommand("inverse", "exact inverse of the (p,2) cabling map");
  inverse->add_option("--r", r)->required();
  inverse->add_option("--p", p)->required();
  inverse->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  inverse->add_flag("--numeric", numeric);

  auto* norms = app.add_subcommand("norms", "operator norms of the (p,2) cabling map and its inverse");
  norms->add_option("--p", p)->required();
  norms->add_option("--r-max", r_max)->required();
  norms->add_option("--tol", tol)->capture_default_str();
  norms->add_option("--jobs", jobs);

  auto* tv = app.add_subcommand("tv", "Turaev-Viro invariant of a knot complement");
  tv->add_option("--knot", knot)->required();
  tv->add_option("--r", r)->required();
  tv->add_option("--prec", prec)->capture_default_str();

  auto* scan_cmd = app.add_subcommand("scan", "growth series over odd levels");
  scan_cmd->add_option("--knot", knot)->required();
  scan_cmd->add_option("--r-min", r_min)->required();
  scan_cmd->add_option("--r-max", r_max)->required();
  scan_cmd->add_option("--jobs", jobs);
  scan_cmd->add_option("--out", out_path);
  scan_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  scan_cmd->add_option("--prec", prec);

  auto* sandwich = app.add_subcommand("sandwich", "compare TV of a knot and of its (p,2) cable");
  sandwich->add_option("--knot", knot)->required();
  sandwich->add_option("--p", p)->required();
  sandwich->add_option("--r-max", r_max)->required();
  sandwich->add_option("--out", out_path);
  sandwich->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (jobs < 1) throw ValidationError("--jobs must be >= 1");
    if (*matrix) {
      write_operator(cabling_matrix(TQFTParameter(r), p, q), format.empty() ? "json" : format, numeric, out);
      return kOk;
    }
    if (*inverse) {
      write_operator(p2_inverse(TQFTParameter(r), p), format.empty() ? "json" : format, numeric, out);
      return kOk;
    }
    if (*verify) {
      const std::vector<int> ps = parse_int_list(p_list);
      for (int value : ps)
        if (value % 2 == 0) throw ValidationError("p must be odd, got " + std::to_string(value));
      if (r_max < 3) throw ValidationError("--r-max must be >= 3");
      int cases = 0, failures = 0;
      for (int level = 3; level <= r_max; level += 2) {
        const TQFTParameter param(level);
        for (int slope : ps) {
          const CablingOperator m = cabling_matrix(param, slope, 2);
          const CablingOperator n = p2_inverse(param, slope);
          const bool factor_ok = p2_factorization(param, slope).compose() == m.entries();
          const bool inverse_ok = (m.entries() * n.entries()).is_identity() && (n.entries() * m.entries()).is_identity();
          ++cases;
          if (!factor_ok || !inverse_ok) {
            ++failures;
            out << "MISMATCH r=" << level << " p=" << slope << (factor_ok ? "" : " factorization")
                << (inverse_ok ? "" : " inverse") << "\n";
          }
        }
      }
      if (failures != 0) {
        out << failures << " of " << cases << " cases failed\n";
        return kFailure;
      }
      out << "all exact: " << cases << " cases, odd r in [3," << r_max << "], p in {" << p_list << "}\n";
      return kOk;
    }
    if (*norms) {
      const NormReport report = norm_scan(p, r_max, NormOptions{tol, 10000}, jobs);
      out << "r,m,norm,inverse_norm,verdict\n";
      bool failed = false;
      for (const NormRow& row : report.rows) {
        out << row.r << "," << (row.r - 1) / 2 << "," << format_double(row.norm) << ","
            << format_double(row.inverse_norm) << ",";
        if (!row.error.empty()) {
          out << "ERROR " << row.error << "\n";
          failed = true;
        } else {
          out << (row.pass ? "PASS" : "FAIL") << "\n";
        }
      }
      if (failed) err << "norm iteration failed for at least one level\n";
      return report.all_pass ? kOk : kFailure;
    }
    if (*tv) {
      const KnotSpec spec = parse_knot_spec(knot);
      const GrowthPoint pt = growth_point(TQFTParameter(r, prec), spec);
      out << "knot " << to_string(spec) << "\nr " << r << "\nTV " << format_double(pt.tv) << "\nf "
          << (pt.f ? format_double(*pt.f) : std::string("absent")) << "\n";
      return kOk;
    }
    if (*scan_cmd) {
      const KnotSpec spec = parse_knot_spec(knot);
      const GrowthSeries series = scan(spec, ScanOptions{r_min, r_max, prec, jobs});
      for (int level : series.precision_mismatches)
        err << "warning: extended-precision rerun disagrees at r=" << level << "\n";
      const std::string payload = format == "json" ? to_json(series).dump(2) + "\n" : to_csv(series);
      emit(payload, out_path, out);
      return kOk;
    }
    if (*sandwich) {
      const KnotSpec spec = parse_knot_spec(knot);
      const SandwichReport report = sandwich_check(spec, p, 3, r_max, kDoubleBits, jobs);
      emit(to_csv(report), out_path, out);
      std::ostream& summary = out_path.empty() ? err : out;
      summary << "sandwich " << report.knot << " p=" << p << ": " << (report.all_pass ? "all PASS" : "FAIL")
              << ", ratio exponent " << (report.exponent ? format_double(*report.exponent) : "n/a") << "\n";
      return report.all_pass ? kOk : kFailure;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kFailure;
  }
  return kValidation;
}

}  // namespace tvcable
