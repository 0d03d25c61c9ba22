#include "walks/holonomic.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace walks {

int degree(const IntPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (sgn(p[static_cast<std::size_t>(i)]) != 0) return i;
  return -1;
}

BigInt eval(const IntPoly& p, const BigInt& x) {
  BigInt r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

int OdeSpec::max_degree() const {
  int m = -1;
  for (const auto& p : coeffs) m = std::max(m, degree(p));
  return m;
}

namespace {

using nlohmann::json;

BigInt parse_integer(const json& v) {
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    BigInt out;
    if (s.empty() || out.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
    return out;
  }
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

std::vector<IntPoly> parse_coefficients(const json& doc) {
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array())
    throw std::invalid_argument("missing 'coefficients' array");
  std::vector<IntPoly> out;
  for (const auto& poly : doc["coefficients"]) {
    if (!poly.is_array()) throw std::invalid_argument("each coefficient must be a list of integers");
    IntPoly p;
    for (const auto& c : poly) p.push_back(parse_integer(c));
    out.push_back(std::move(p));
  }
  if (out.empty() || degree(out.back()) < 0)
    throw std::invalid_argument("the leading coefficient polynomial must be nonzero");
  return out;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

OdeSpec parse_ode_json(const std::string& text) {
  const json doc = parse_document(text);
  OdeSpec ode;
  ode.model = doc.value("model", "");
  ode.coeffs = parse_coefficients(doc);
  if (doc.contains("order") && doc["order"].get<int>() != ode.order())
    throw std::invalid_argument("'order' does not match the number of coefficient polynomials");
  return ode;
}

RecurrenceSpec parse_recurrence_json(const std::string& text) {
  const json doc = parse_document(text);
  RecurrenceSpec rec;
  rec.model = doc.value("model", "");
  rec.coeffs = parse_coefficients(doc);
  if (doc.contains("span") && doc["span"].get<int>() != rec.span())
    throw std::invalid_argument("'span' does not match the number of coefficient polynomials");
  return rec;
}

OdeSpec load_ode(const std::string& path) { return parse_ode_json(read_file(path)); }
RecurrenceSpec load_recurrence(const std::string& path) { return parse_recurrence_json(read_file(path)); }

std::vector<BigInt> ode_residual(const OdeSpec& ode, const std::vector<BigInt>& series) {
  const int N = static_cast<int>(series.size()) - 1;
  const int top = N - std::max(ode.order(), ode.max_degree());
  if (top < 0)
    throw std::invalid_argument("series of length " + std::to_string(N + 1) +
                                " is too short for an operator of order " + std::to_string(ode.order()) +
                                " with coefficient degree " + std::to_string(ode.max_degree()));
  std::vector<BigInt> residual(static_cast<std::size_t>(top + 1));
  for (int j = 0; j <= ode.order(); ++j) {
    // [t^k] D^j f = (k+1)...(k+j) c_{k+j}
    std::vector<BigInt> deriv(static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top && k + j <= N; ++k) {
      BigInt f = series[static_cast<std::size_t>(k + j)];
      for (int i = 1; i <= j; ++i) f *= k + i;
      deriv[static_cast<std::size_t>(k)] = f;
    }
    const IntPoly& p = ode.coeffs[static_cast<std::size_t>(j)];
    for (int m = 0; m <= top; ++m)
      for (int i = 0; i <= std::min(m, degree(p)); ++i)
        residual[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(i)] * deriv[static_cast<std::size_t>(m - i)];
  }
  return residual;
}

HolonomicCheck check_ode(const OdeSpec& ode, const std::vector<BigInt>& series) {
  const auto r = ode_residual(ode, series);
  HolonomicCheck out;
  out.checked_through = static_cast<int>(r.size()) - 1;
  for (std::size_t m = 0; m < r.size(); ++m)
    if (sgn(r[m]) != 0) {
      out.ok = false;
      out.first_failure = static_cast<int>(m);
      out.residual = r[m];
      break;
    }
  return out;
}

HolonomicCheck check_recurrence(const RecurrenceSpec& rec, const std::vector<BigInt>& seq) {
  const int N = static_cast<int>(seq.size()) - 1;
  if (N < rec.span())
    throw std::invalid_argument("need at least " + std::to_string(rec.span() + 1) + " terms for a recurrence of span " +
                                std::to_string(rec.span()));
  HolonomicCheck out;
  out.checked_through = N - rec.span();
  for (int n = 0; n <= N - rec.span(); ++n) {
    BigInt sum = 0;
    for (int j = 0; j <= rec.span(); ++j) sum += eval(rec.coeffs[static_cast<std::size_t>(j)], n) * seq[static_cast<std::size_t>(n + j)];
    if (sgn(sum) != 0) {
      out.ok = false;
      out.first_failure = n;
      out.residual = sum;
      break;
    }
  }
  return out;
}

}  // namespace walks
