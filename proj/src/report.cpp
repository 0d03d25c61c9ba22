#include "walks/report.hpp"

#include <sstream>

namespace walks {

using nlohmann::json;

namespace {

std::string point_text(const std::vector<int>& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + std::to_string(w[k]);
  return out + ")";
}

bool needs_parens(const std::string& s) { return s.find(" ") != std::string::npos; }

}  // namespace

std::string n_power_text(int dimension, int l) {
  const int num = dimension + l;
  return num % 2 == 0 ? "-" + std::to_string(num / 2) : "-" + std::to_string(num) + "/2";
}

json surd_json(const SurdConstant& c) {
  return {{"q", to_string(c.q())},
          {"radicand", c.radicand().get_str()},
          {"piHalfPower", c.pi_half_power()},
          {"text", c.to_string()}};
}

json minimal_point_json(const StepSet& s, const MinimalPoint& p) {
  return {{"w", p.w}, {"S(w)", to_string(p.Sw)}, {"t", to_string(p.tw)}, {"hessian", to_string(hessian_det(s, p))}};
}

json terms_json(const AsymptoticExpansion& e, int digits) {
  json out = json::array();
  for (const auto& t : e.terms) {
    out.push_back({{"l", t.l},
                   {"nPower", n_power_text(e.dimension, t.l)},
                   {"even", surd_json(t.even)},
                   {"odd", surd_json(t.odd)},
                   {"decimal", {{"even", t.even.decimal(digits)}, {"odd", t.odd.decimal(digits)}}},
                   {"text", term_text(t, e.dimension, e.base)}});
  }
  return out;
}

json rational_json(const RationalFunctionSpec& spec) {
  return {{"kind", to_string(spec.kind)},
          {"numerator", spec.numerator.to_string()},
          {"tPower", spec.index_shift()},
          {"denominator", "1 - t*(" + spec.P.to_string() + ")"}};
}

std::string term_text(const ExpansionTerm& t, int dimension, long base) {
  std::string coeff;
  if (t.even.is_zero() && t.odd.is_zero()) return "0";
  if (t.odd.is_zero()) {
    coeff = t.even.to_string();
  } else if (t.even.is_zero()) {
    coeff = t.odd.to_string() + "·(-1)^n";
  } else {
    SurdConstant odd = t.odd;
    const bool negative = sgn(odd.q()) < 0;
    if (negative) odd = -odd;
    coeff = "(" + t.even.to_string() + (negative ? " - " : " + ") + odd.to_string() + "·(-1)^n)";
  }
  (void)needs_parens;
  return coeff + " · n^{" + n_power_text(dimension, t.l) + "} · " + std::to_string(base) + "^n";
}

json report_json(const ReportInput& in) {
  const StepSet& s = *in.steps;
  json doc;
  doc["model"] = in.model;
  doc["dimension"] = s.dimension();
  doc["|S|"] = s.size();
  doc["steps"] = s.steps();
  doc["forward_counts"] = forward_counts(s);
  json pts = json::array();
  for (const auto& p : minimal_points(s)) pts.push_back(minimal_point_json(s, p));
  doc["minimal_points"] = pts;
  doc["leading_constant"] = surd_json(leading_constant(s));
  if (in.walks) doc["walk_terms"] = terms_json(*in.walks, in.digits);
  if (in.excursions) doc["excursion_terms"] = terms_json(*in.excursions, in.digits);
  if (in.emit_rational) {
    doc["rational"] = {{"walks", rational_json(build_walk_rational(s))},
                       {"excursions", rational_json(build_excursion_rational(s))}};
  }
  return doc;
}

std::string report_text(const ReportInput& in) {
  const StepSet& s = *in.steps;
  std::ostringstream os;
  os << "model: " << in.model << "  (d = " << s.dimension() << ", |S| = " << s.size() << ")\n";
  os << "forward counts:";
  for (long c : forward_counts(s)) os << " " << c;
  os << "\nminimal points:\n";
  for (const auto& p : minimal_points(s))
    os << "  " << point_text(p.w) << "  S(w) = " << to_string(p.Sw) << "  t = " << to_string(p.tw)
       << "  hessian = " << to_string(hessian_det(s, p)) << "\n";
  if (in.emit_rational) {
    os << serialize(build_walk_rational(s));
    os << serialize(build_excursion_rational(s));
  }
  auto section = [&](const char* title, const AsymptoticExpansion& e) {
    os << title << ":\n";
    for (const auto& t : e.terms) {
      if (t.even.is_zero() && t.odd.is_zero()) {
        os << "  0 · n^{" << n_power_text(e.dimension, t.l) << "}\n";
        continue;
      }
      os << "  " << term_text(t, e.dimension, e.base) << "    [even " << t.even.decimal(in.digits);
      if (!t.odd.is_zero()) os << ", odd " << t.odd.decimal(in.digits);
      os << "]\n";
    }
  };
  if (in.walks) section("walks", *in.walks);
  if (in.excursions) section("excursions", *in.excursions);
  return os.str();
}

}  // namespace walks
