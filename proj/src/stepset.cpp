#include "walks/stepset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace walks {

namespace {

std::string step_text(const Exponents& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + ")";
}

}  // namespace

std::string to_string(ValidationFailure f) {
  switch (f) {
    case ValidationFailure::DimensionMismatch: return "DimensionMismatch";
    case ValidationFailure::OutOfRangeEntry: return "OutOfRangeEntry";
    case ValidationFailure::ZeroStepPresent: return "ZeroStepPresent";
    case ValidationFailure::DuplicateStep: return "DuplicateStep";
    case ValidationFailure::NotSymmetric: return "NotSymmetric";
    case ValidationFailure::NoForwardStep: return "NoForwardStep";
  }
  return "Unknown";
}

StepSet validate(const RawStepSet& raw) {
  const int d = raw.dimension;
  if (d <= 0) throw ValidationError(ValidationFailure::DimensionMismatch, 0, std::nullopt, "dimension must be positive");

  std::set<Exponents> seen;
  for (const auto& s : raw.steps) {
    if (static_cast<int>(s.size()) != d)
      throw ValidationError(ValidationFailure::DimensionMismatch, 0, s,
                            "step " + step_text(s) + " does not have " + std::to_string(d) + " coordinates");
    for (int v : s)
      if (v < -1 || v > 1)
        throw ValidationError(ValidationFailure::OutOfRangeEntry, 0, s,
                              "step " + step_text(s) + " has an entry outside {-1,0,1}");
    if (std::all_of(s.begin(), s.end(), [](int v) { return v == 0; }))
      throw ValidationError(ValidationFailure::ZeroStepPresent, 0, s, "the zero step is not allowed");
    if (!seen.insert(s).second)
      throw ValidationError(ValidationFailure::DuplicateStep, 0, s, "duplicate step " + step_text(s));
  }

  for (int k = 0; k < d; ++k) {
    for (const auto& s : raw.steps) {
      Exponents r = s;
      r[k] = -r[k];
      if (!seen.contains(r))
        throw ValidationError(ValidationFailure::NotSymmetric, k + 1, s,
                              "not symmetric about axis " + std::to_string(k + 1) + ": " + step_text(s) +
                                  " has no reflection " + step_text(r));
    }
    const bool forward = std::any_of(raw.steps.begin(), raw.steps.end(), [k](const Exponents& s) { return s[k] == 1; });
    if (!forward)
      throw ValidationError(ValidationFailure::NoForwardStep, k + 1, std::nullopt,
                            "no step moves forward along axis " + std::to_string(k + 1));
  }
  return StepSet(d, raw.steps);
}

LaurentPoly inventory(const StepSet& s) {
  LaurentPoly p(s.dimension());
  for (const auto& step : s.steps()) p.add_term(step, Rational(1));
  return p;
}

InventoryDecomposition decompose(const StepSet& s, int axis) {
  const int d = s.dimension();
  if (axis < 0 || axis >= d) throw std::out_of_range("axis out of range");
  InventoryDecomposition dec{axis, LaurentPoly(d), LaurentPoly(d)};
  for (const auto& step : s.steps()) {
    Exponents rest = step;
    rest[axis] = 0;
    if (step[axis] == 1) dec.s1.add_term(rest, Rational(1));
    if (step[axis] == 0) dec.s0.add_term(rest, Rational(1));
  }
  // (1/z_k + z_k) * S1 + S0 must reproduce the inventory.
  LaurentPoly reflect = LaurentPoly::variable(d, axis, 1) + LaurentPoly::variable(d, axis, -1);
  if (!(reflect * dec.s1 + dec.s0 == inventory(s)))
    throw std::logic_error("inventory decomposition does not reconstruct S");
  return dec;
}

std::vector<long> forward_counts(const StepSet& s) {
  std::vector<long> counts(static_cast<std::size_t>(s.dimension()), 0);
  for (const auto& step : s.steps())
    for (int k = 0; k < s.dimension(); ++k)
      if (step[k] == 1) ++counts[k];
  return counts;
}

LaurentPoly apply_sign_map(const LaurentPoly& p, std::span<const int> sigma) { return p.apply_sign_map(sigma); }

std::vector<std::vector<int>> sign_vectors(int dimension) {
  std::vector<std::vector<int>> out;
  const unsigned count = 1U << dimension;
  for (unsigned mask = 0; mask < count; ++mask) {
    std::vector<int> w(dimension);
    for (int k = 0; k < dimension; ++k) w[k] = (mask >> k) & 1U ? -1 : 1;
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

struct Token {
  std::string text;
  std::size_t pos;
};

std::vector<Token> split(const std::string& text, std::size_t begin, std::size_t end, char sep) {
  std::vector<Token> out;
  std::size_t start = begin;
  for (std::size_t i = begin; i <= end; ++i) {
    if (i == end || text[i] == sep) {
      std::size_t a = start, b = i;
      while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
      while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
      out.push_back({text.substr(a, b - a), a});
      start = i + 1;
    }
  }
  return out;
}

RawStepSet parse_compass(const std::string& text) {
  static const std::pair<const char*, Exponents> table[] = {
      {"E", {1, 0}},  {"W", {-1, 0}}, {"N", {0, 1}},   {"S", {0, -1}},
      {"NE", {1, 1}}, {"NW", {-1, 1}}, {"SE", {1, -1}}, {"SW", {-1, -1}},
  };
  RawStepSet raw{2, {}};
  for (const auto& tok : split(text, 0, text.size(), ',')) {
    std::string up = tok.text;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    auto it = std::find_if(std::begin(table), std::end(table), [&](const auto& e) { return up == e.first; });
    if (it == std::end(table)) throw ParseError(tok.pos, "unknown compass direction '" + tok.text + "'");
    raw.steps.push_back(it->second);
  }
  return raw;
}

RawStepSet parse_tuples(const std::string& text) {
  RawStepSet raw;
  auto tuples = split(text, 0, text.size(), ';');
  if (!tuples.empty() && tuples.back().text.empty() && tuples.size() > 1) tuples.pop_back();
  for (const auto& tup : tuples) {
    if (tup.text.empty()) throw ParseError(tup.pos, "empty step");
    Exponents step;
    for (const auto& entry : split(text, tup.pos, tup.pos + tup.text.size(), ',')) {
      long v = 0;
      const char* first = entry.text.data();
      const char* last = first + entry.text.size();
      if (!entry.text.empty() && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (entry.text.empty() || ec != std::errc() || ptr != last || v < -1000 || v > 1000)
        throw ParseError(entry.pos, "expected an integer, got '" + entry.text + "'");
      step.push_back(static_cast<int>(v));
    }
    if (raw.dimension == 0) raw.dimension = static_cast<int>(step.size());
    if (static_cast<int>(step.size()) != raw.dimension)
      throw ParseError(tup.pos, "step has " + std::to_string(step.size()) + " coordinates, expected " +
                                    std::to_string(raw.dimension));
    raw.steps.push_back(std::move(step));
  }
  return raw;
}

}  // namespace

RawStepSet parse_raw_stepset(const std::string& text) {
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }))
    throw ParseError(0, "empty step set");
  const bool compass = std::any_of(text.begin(), text.end(), [](unsigned char c) { return std::isalpha(c); });
  return compass ? parse_compass(text) : parse_tuples(text);
}

StepSet parse_stepset(const std::string& text) { return validate(parse_raw_stepset(text)); }

std::string serialize(const StepSet& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.steps().size(); ++i) {
    if (i) os << "; ";
    const auto& step = s.steps()[i];
    for (std::size_t k = 0; k < step.size(); ++k) os << (k ? "," : "") << step[k];
  }
  return os.str();
}

}  // namespace walks
