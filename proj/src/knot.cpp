#include "tvcable/knot.hpp"

#include <charconv>
#include <numeric>

namespace tvcable {
namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ValidationError("bad integer '" + std::string(text) + "' in knot spec '" + std::string(whole) + "'");
  }
  return value;
}

KnotSpec parse(std::string_view text, std::string_view whole) {
  if (text == "unknot") return KnotSpec::unknot();
  if (text == "figure8") return KnotSpec::figure_eight();
  if (text.starts_with("torus:")) {
    const std::string_view args = text.substr(6);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw ValidationError("torus spec needs 'torus:p,q'");
    return KnotSpec::torus(parse_int(args.substr(0, comma), whole), parse_int(args.substr(comma + 1), whole));
  }
  if (text.starts_with("cable:")) {
    const std::string_view args = text.substr(6);
    const auto colon = args.find(':');
    if (colon == std::string_view::npos) throw ValidationError("cable spec needs 'cable:p:<spec>'");
    const int p = parse_int(args.substr(0, colon), whole);
    return KnotSpec::cable(p, parse(args.substr(colon + 1), whole));
  }
  throw ValidationError("unknown knot spec '" + std::string(whole) + "'");
}

}  // namespace

KnotSpec KnotSpec::torus(int p, int q) {
  if (q < 1) throw ValidationError("torus knot needs q >= 1");
  if (std::gcd(p, q) != 1) throw ValidationError("torus knot needs coprime (p,q)");
  return {TorusKnot{p, q}};
}

KnotSpec KnotSpec::cable(int p, KnotSpec inner) {
  if (p % 2 == 0) throw ValidationError("cable slope p must be odd, got " + std::to_string(p));
  return {Cable{p, std::make_shared<const KnotSpec>(std::move(inner))}};
}

KnotSpec parse_knot_spec(std::string_view text) { return parse(text, text); }

std::string to_string(const KnotSpec& spec) {
  return std::visit(
      [](const auto& node) -> std::string {
        using Node = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<Node, Unknot>) {
          return "unknot";
        } else if constexpr (std::is_same_v<Node, FigureEight>) {
          return "figure8";
        } else if constexpr (std::is_same_v<Node, TorusKnot>) {
          return "torus:" + std::to_string(node.p) + "," + std::to_string(node.q);
        } else {
          return "cable:" + std::to_string(node.p) + ":" + to_string(*node.inner);
        }
      },
      spec.node);
}

void validate(const KnotSpec& spec) {
  if (const auto* t = std::get_if<TorusKnot>(&spec.node)) {
    KnotSpec::torus(t->p, t->q);
  } else if (const auto* c = std::get_if<Cable>(&spec.node)) {
    if (c->p % 2 == 0) throw ValidationError("cable slope p must be odd");
    if (!c->inner) throw ValidationError("cable without inner knot");
    validate(*c->inner);
  }
}

TuraevViroValue turaev_viro_value(const TQFTParameter& param, const KnotSpec& spec) {
  validate(spec);
  return visit_precision(param.precision(), [&]<typename Real>(std::type_identity<Real>) {
    using std::log;
    const Real tv = turaev_viro<Real>(param, spec);
    const double log_tv =
        tv > 0 ? to_double<Real>(log(tv)) : -std::numeric_limits<double>::infinity();
    return TuraevViroValue{to_double<Real>(tv), log_tv};
  });
}

}  // namespace tvcable
