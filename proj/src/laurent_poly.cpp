#include "walks/laurent_poly.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace walks {

namespace {

void check_dimension(const LaurentPoly& p, std::size_t got) {
  if (got != static_cast<std::size_t>(p.dimension()))
    throw DimensionError("point of length " + std::to_string(got) + " for a polynomial in " +
                         std::to_string(p.dimension()) + " variables");
}

}  // namespace

LaurentPoly::LaurentPoly(int dimension) : dim_(dimension) {
  if (dimension <= 0) throw DimensionError("dimension must be positive");
}

LaurentPoly LaurentPoly::constant(int dimension, const Rational& c) {
  LaurentPoly p(dimension);
  p.add_term(Exponents(dimension, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponents e, const Rational& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int dimension, int k, int power) {
  Exponents e(dimension, 0);
  e.at(k) = power;
  return monomial(std::move(e));
}

Rational LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != static_cast<std::size_t>(dim_)) throw DimensionError("exponent vector has wrong length");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.dim_ != dim_) throw DimensionError("adding polynomials of different dimensions");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.dim_ != dim_) throw DimensionError("subtracting polynomials of different dimensions");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.dim_ != b.dim_) throw DimensionError("multiplying polynomials of different dimensions");
  LaurentPoly r(a.dim_);
  Exponents e(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.dim_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(dim_, Rational(1));
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Rational LaurentPoly::eval_signs(std::span<const int> w) const {
  check_dimension(*this, w.size());
  for (int v : w)
    if (v != 1 && v != -1) throw std::invalid_argument("eval_signs expects coordinates +1 or -1");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    int sign = 1;
    for (int k = 0; k < dim_; ++k)
      if (w[k] < 0 && (e[k] % 2 != 0)) sign = -sign;
    if (sign > 0)
      sum += c;
    else
      sum -= c;
  }
  return sum;
}

Rational LaurentPoly::eval_ones() const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::apply_sign_map(std::span<const int> sigma) const {
  check_dimension(*this, sigma.size());
  LaurentPoly r(dim_);
  Exponents f(dim_);
  for (const auto& [e, c] : terms_) {
    for (int k = 0; k < dim_; ++k) f[k] = sigma[k] * e[k];
    r.add_term(f, c);
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(std::span<const int> shift) const {
  check_dimension(*this, shift.size());
  LaurentPoly r(dim_);
  Exponents f(dim_);
  for (const auto& [e, c] : terms_) {
    for (int k = 0; k < dim_; ++k) f[k] = e[k] + shift[k];
    r.terms_.emplace(f, c);
  }
  return r;
}

int LaurentPoly::min_exponent(int k) const {
  if (terms_.empty()) return 0;
  int m = INT_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, e.at(k));
  return m;
}

int LaurentPoly::max_exponent(int k) const {
  if (terms_.empty()) return 0;
  int m = INT_MIN;
  for (const auto& [e, c] : terms_) m = std::max(m, e.at(k));
  return m;
}

std::string variable_name(int dimension, int k) {
  static const char* small[] = {"x", "y", "z"};
  if (dimension <= 3) return small[k];
  return "z" + std::to_string(k + 1);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::string mono;
    for (int k = 0; k < dim_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(dim_, k);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty())
      os << walks::to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << walks::to_string(mag) << "*" << mono;
  }
  return os.str();
}

Rational laurent_eval_signs(const LaurentPoly& p, std::span<const int> w) { return p.eval_signs(w); }

}  // namespace walks
