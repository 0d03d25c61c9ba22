#include "walks/diagonal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace walks {

std::string to_string(SeriesKind k) { return k == SeriesKind::walks ? "walks" : "excursions"; }

SeriesKind parse_series_kind(const std::string& text) {
  if (text == "walks") return SeriesKind::walks;
  if (text == "excursions") return SeriesKind::excursions;
  throw std::invalid_argument("unknown kind '" + text + "' (expected walks or excursions)");
}

namespace {

LaurentPoly all_ones_monomial(int d) { return LaurentPoly::monomial(Exponents(d, 1)); }

LaurentPoly product_over_axes(int d, int low_power, const Rational& low_coeff, int high_power,
                              const Rational& high_coeff) {
  LaurentPoly out = LaurentPoly::constant(d, Rational(1));
  for (int k = 0; k < d; ++k)
    out = out * (LaurentPoly::variable(d, k, low_power) * low_coeff + LaurentPoly::variable(d, k, high_power) * high_coeff);
  return out;
}

void decode(std::size_t flat, int extent, std::span<int> coords) {
  for (auto& c : coords) {
    c = static_cast<int>(flat % static_cast<std::size_t>(extent));
    flat /= static_cast<std::size_t>(extent);
  }
}

std::size_t box_size(int extent, int d) {
  std::size_t n = 1;
  for (int k = 0; k < d; ++k) n *= static_cast<std::size_t>(extent);
  return n;
}

long integer_coefficient(const Rational& c) {
  if (c.get_den() != 1 || !c.get_num().fits_slong_p())
    throw std::invalid_argument("series expansion needs small integer coefficients");
  return c.get_num().get_si();
}

// Runs c_n = P * c_{n-1} on a dense grid and hands each layer to `visit`
// together with the extent that bounds its support.
template <class Visit>
void expand_layers(const RationalFunctionSpec& spec, int order, int cap, Exec exec, Visit&& visit) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  const int d = spec.dimension();
  if (spec.numerator.dimension() != d) throw DimensionError("numerator and P differ in dimension");
  int num_deg = 0, p_deg = 0;
  for (int k = 0; k < d; ++k) {
    if (spec.numerator.min_exponent(k) < 0 || spec.P.min_exponent(k) < 0)
      throw std::invalid_argument("series expansion needs polynomials without negative exponents");
    num_deg = std::max(num_deg, spec.numerator.max_exponent(k));
    p_deg = std::max(p_deg, spec.P.max_exponent(k));
  }
  std::vector<StencilEntry> stencil;
  for (const auto& [e, c] : spec.P.terms()) stencil.push_back({e, integer_coefficient(c)});

  auto extent_of = [&](int n) { return std::min(cap, num_deg + p_deg * n + 1); };
  const int side = extent_of(order);
  BoxGrid cur(d, side), next(d, side);
  for (const auto& [e, c] : spec.numerator.terms()) {
    bool inside = std::all_of(e.begin(), e.end(), [side](int v) { return v < side; });
    if (inside) cur.at(e) = integer_coefficient(c);
  }
  for (int n = 0;; ++n) {
    visit(n, static_cast<const BoxGrid&>(cur), extent_of(n));
    if (n == order) break;
    stencil_step(exec, cur, extent_of(n), next, extent_of(n + 1), stencil);
    std::swap(cur, next);
  }
}

int prune_cap(const RationalFunctionSpec& spec, int order, bool prune) {
  return prune ? order + spec.index_shift() + 1 : std::numeric_limits<int>::max();
}

CheckResult compare_polys(int n, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs == rhs) return {};
  std::set<Exponents, GradedLexLess> keys;
  for (const auto& [e, c] : lhs.terms()) keys.insert(e);
  for (const auto& [e, c] : rhs.terms()) keys.insert(e);
  for (const auto& e : keys)
    if (lhs.coeff(e) != rhs.coeff(e)) return {false, Discrepancy{n, e, lhs.coeff(e), rhs.coeff(e)}};
  return {false, Discrepancy{n, {}, 0, 0}};
}

}  // namespace

RationalFunctionSpec build_walk_rational(const StepSet& s) {
  const int d = s.dimension();
  RationalFunctionSpec spec;
  spec.kind = SeriesKind::walks;
  spec.numerator = product_over_axes(d, 0, Rational(1), 1, Rational(1));
  spec.P = all_ones_monomial(d) * inventory(s);
  return spec;
}

RationalFunctionSpec build_excursion_rational(const StepSet& s) {
  const int d = s.dimension();
  RationalFunctionSpec spec;
  spec.kind = SeriesKind::excursions;
  spec.numerator = product_over_axes(d, 0, Rational(-1), 2, Rational(1));
  spec.P = all_ones_monomial(d) * inventory(s);
  return spec;
}

RationalFunctionSpec build_rational(const StepSet& s, SeriesKind kind) {
  return kind == SeriesKind::walks ? build_walk_rational(s) : build_excursion_rational(s);
}

std::string serialize(const RationalFunctionSpec& spec) {
  std::ostringstream os;
  os << "kind: " << to_string(spec.kind) << "\n";
  os << "G = " << (spec.kind == SeriesKind::excursions ? "t^2*(" : "") << spec.numerator.to_string()
     << (spec.kind == SeriesKind::excursions ? ")" : "") << "\n";
  os << "H = 1 - t*(" << spec.P.to_string() << ")\n";
  return os.str();
}

LaurentPoly denominator_polynomial(const RationalFunctionSpec& spec) {
  const int d = spec.dimension();
  LaurentPoly h = LaurentPoly::constant(d + 1, Rational(1));
  for (const auto& [e, c] : spec.P.terms()) {
    Exponents f = e;
    f.push_back(1);
    h.add_term(f, -c);
  }
  return h;
}

LaurentPoly euler_derivative(const LaurentPoly& p, int k) {
  LaurentPoly out(p.dimension());
  for (const auto& [e, c] : p.terms())
    if (e[k] != 0) out.add_term(e, c * e[k]);
  return out;
}

bool smoothness_identity_holds(const RationalFunctionSpec& spec) {
  LaurentPoly h = denominator_polynomial(spec);
  const int t = spec.dimension();
  return euler_derivative(h, t) == h - LaurentPoly::constant(t + 1, Rational(1));
}

LaurentPoly signed_orbit_of_monomial(int dimension) {
  LaurentPoly out(dimension);
  const Exponents ones(dimension, 1);
  for (const auto& sigma : sign_vectors(dimension)) {
    int sign = 1;
    for (int v : sigma) sign *= v;
    out += LaurentPoly::monomial(ones).apply_sign_map(sigma) * Rational(sign);
  }
  return out;
}

OrbitSum build_orbit_sum(const StepSet& s) {
  const int d = s.dimension();
  OrbitSum r;
  r.numerator = product_over_axes(d, -1, Rational(-1), 1, Rational(1));
  r.monomial = all_ones_monomial(d);
  r.S = inventory(s);
  return r;
}

SeriesTable series_expand(const RationalFunctionSpec& spec, int order, const ExpandOptions& options) {
  SeriesTable table;
  table.order = order;
  const int d = spec.dimension();
  expand_layers(spec, order, prune_cap(spec, order, options.prune), options.exec,
                [&](int, const BoxGrid& g, int extent) {
                  LaurentPoly p(d);
                  Exponents e(d);
                  const std::size_t cells = box_size(extent, d);
                  for (std::size_t flat = 0; flat < cells; ++flat) {
                    decode(flat, extent, e);
                    const BigInt& v = g.at(e);
                    if (sgn(v) != 0) p.add_term(e, Rational(v));
                  }
                  table.coeffs.push_back(std::move(p));
                });
  return table;
}

std::vector<BigInt> diagonal_coeffs(const RationalFunctionSpec& spec, int order, const ExpandOptions& options) {
  std::vector<BigInt> out;
  const int d = spec.dimension();
  expand_layers(spec, order, prune_cap(spec, order, options.prune), options.exec,
                [&](int n, const BoxGrid& g, int extent) {
                  const int m = n + spec.index_shift();
                  out.push_back(m < extent ? g.at(std::vector<int>(d, m)) : BigInt(0));
                });
  return out;
}

SeriesTable orbit_sum_series(const StepSet& s, int order) {
  const int d = s.dimension();
  SeriesTable table;
  table.order = order;
  LaurentPoly cur = product_over_axes(d, 0, Rational(1), -2, Rational(-1));
  const LaurentPoly S = inventory(s);
  for (int n = 0; n <= order; ++n) {
    table.coeffs.push_back(cur);
    if (n < order) cur = cur * S;
  }
  return table;
}

SeriesTable positive_part(const SeriesTable& table, std::vector<int> axes) {
  SeriesTable out;
  out.order = table.order;
  for (const auto& c : table.coeffs) {
    const int d = c.dimension();
    if (axes.empty())
      for (int k = 0; k < d; ++k) axes.push_back(k);
    LaurentPoly p(d);
    for (const auto& [e, v] : c.terms())
      if (std::all_of(axes.begin(), axes.end(), [&e](int k) { return e[k] >= 0; })) p.add_term(e, v);
    out.coeffs.push_back(std::move(p));
  }
  return out;
}

std::string Discrepancy::describe() const {
  std::ostringstream os;
  os << "order " << n;
  if (!monomial.empty()) {
    os << ", monomial (";
    for (std::size_t k = 0; k < monomial.size(); ++k) os << (k ? "," : "") << monomial[k];
    os << ")";
  }
  os << ": lhs " << to_string(lhs) << " != rhs " << to_string(rhs);
  return os.str();
}

SeriesTable endpoint_table(const CountTable& table) {
  SeriesTable out;
  out.order = table.max_length();
  for (int n = 0; n <= table.max_length(); ++n) out.coeffs.push_back(table.endpoint_series(n));
  return out;
}

CheckResult verify_orbit_sum_identity(const StepSet& s, const SeriesTable& F, int order) {
  if (order > F.order || static_cast<int>(F.coeffs.size()) <= order)
    throw std::invalid_argument("series table shorter than the requested order");
  const int d = s.dimension();
  const LaurentPoly S = inventory(s);
  const LaurentPoly mono = all_ones_monomial(d);
  const auto signs = sign_vectors(d);
  LaurentPoly rhs = signed_orbit_of_monomial(d);
  for (int n = 0; n <= order; ++n) {
    const LaurentPoly shifted = mono * F.coeffs[static_cast<std::size_t>(n)];
    LaurentPoly lhs(d);
    for (const auto& sigma : signs) {
      int sign = 1;
      for (int v : sigma) sign *= v;
      lhs += shifted.apply_sign_map(sigma) * Rational(sign);
    }
    if (auto r = compare_polys(n, lhs, rhs); !r.ok) return r;
    rhs = rhs * S;
  }
  return {};
}

CheckResult verify_pospart_to_diagonal(const StepSet& s, int order) {
  const int d = s.dimension();
  const SeriesTable lhs_table = positive_part(orbit_sum_series(s, order));

  // R(1/z, (z_1...z_d) t) = (1-z_1^2)...(1-z_d^2) / (1 - t P); the factor
  // 1/((1-z_1)...(1-z_d)) turns the diagonal entry into a box sum.
  RationalFunctionSpec spec;
  spec.numerator = product_over_axes(d, 0, Rational(1), 2, Rational(-1));
  spec.P = all_ones_monomial(d) * inventory(s);
  std::vector<BigInt> rhs;
  expand_layers(spec, order, order + 1, default_exec(), [&](int n, const BoxGrid& g, int extent) {
    const int box = std::min(extent, n + 1);
    BigInt sum = 0;
    std::vector<int> c(d);
    const std::size_t cells = box_size(box, d);
    for (std::size_t flat = 0; flat < cells; ++flat) {
      decode(flat, box, c);
      sum += g.at(c);
    }
    rhs.push_back(sum);
  });
  for (int n = 0; n <= order; ++n) {
    const Rational lhs = lhs_table.coeffs[static_cast<std::size_t>(n)].eval_ones();
    if (lhs != Rational(rhs[static_cast<std::size_t>(n)]))
      return {false, Discrepancy{n, {}, lhs, Rational(rhs[static_cast<std::size_t>(n)])}};
  }
  return {};
}

CheckResult compare_sequences(const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs, int dimension) {
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i)
    if (lhs[i] != rhs[i])
      return {false, Discrepancy{static_cast<int>(i), Exponents(static_cast<std::size_t>(dimension), static_cast<int>(i)),
                                 Rational(lhs[i]), Rational(rhs[i])}};
  if (lhs.size() != rhs.size())
    return {false, Discrepancy{static_cast<int>(n), {}, Rational(static_cast<long>(lhs.size())),
                               Rational(static_cast<long>(rhs.size()))}};
  return {};
}

}  // namespace walks
