#include "walks/theta_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walks {

ThetaSeries::ThetaSeries(int dimension, int max_total_degree)
    : index_(MonomialIndex::get(dimension, max_total_degree)), dense_(index_->size()) {}

ThetaSeries ThetaSeries::constant(int dimension, int max_total_degree, const GaussianRational& c) {
  ThetaSeries s(dimension, max_total_degree);
  s.dense_.front() = c;
  return s;
}

ThetaSeries ThetaSeries::monomial(int max_total_degree, const Exponents& e, const GaussianRational& c) {
  ThetaSeries s(static_cast<int>(e.size()), max_total_degree);
  if (total_degree(e) <= max_total_degree) s.set_coeff(e, c);
  return s;
}

std::vector<ThetaSeries::Term> ThetaSeries::terms() const {
  std::vector<Term> out;
  for (std::size_t r = 0; r < dense_.size(); ++r)
    if (!dense_[r].is_zero()) out.emplace_back(index_->exponents(r), dense_[r]);
  return out;
}

std::size_t ThetaSeries::term_count() const {
  std::size_t n = 0;
  for (const auto& c : dense_) n += c.is_zero() ? 0 : 1;
  return n;
}

GaussianRational ThetaSeries::coeff(std::span<const int> e) const {
  if (total_degree(e) > max_total_degree()) return {};
  return dense_[index_->rank(e)];
}

void ThetaSeries::set_coeff(std::span<const int> e, const GaussianRational& c) { dense_[index_->rank(e)] = c; }

void ThetaSeries::check_compatible(const ThetaSeries& o) const {
  if (o.index_ != index_)
    throw DimensionError("theta series differ in dimension or truncation degree");
}

ThetaSeries& ThetaSeries::operator+=(const ThetaSeries& o) {
  check_compatible(o);
  for (std::size_t r = 0; r < dense_.size(); ++r)
    if (!o.dense_[r].is_zero()) dense_[r] += o.dense_[r];
  return *this;
}

ThetaSeries& ThetaSeries::operator-=(const ThetaSeries& o) {
  check_compatible(o);
  for (std::size_t r = 0; r < dense_.size(); ++r)
    if (!o.dense_[r].is_zero()) dense_[r] -= o.dense_[r];
  return *this;
}

ThetaSeries& ThetaSeries::operator*=(const GaussianRational& c) {
  for (auto& v : dense_)
    if (!v.is_zero()) v *= c;
  return *this;
}

bool operator==(const ThetaSeries& a, const ThetaSeries& b) { return a.index_ == b.index_ && a.dense_ == b.dense_; }

ThetaSeries ThetaSeries::multiply(const ThetaSeries& o, Exec exec) const {
  check_compatible(o);
  std::vector<std::size_t> nz_a, nz_b;
  for (std::size_t r = 0; r < dense_.size(); ++r) {
    if (!dense_[r].is_zero()) nz_a.push_back(r);
    if (!o.dense_[r].is_zero()) nz_b.push_back(r);
  }
  ThetaSeries out(dimension(), max_total_degree());
  if (exec == Exec::serial)
    theta_multiply_serial(*index_, dense_, nz_a, o.dense_, nz_b, out.dense_);
  else
    theta_multiply_parallel(*index_, dense_, nz_a, o.dense_, nz_b, out.dense_);
  return out;
}

ThetaSeries ThetaSeries::truncated(int degree) const {
  ThetaSeries out(dimension(), degree);
  for (std::size_t r = 0; r < dense_.size() && index_->degree(r) <= degree; ++r)
    if (!dense_[r].is_zero()) out.set_coeff(index_->exponents(r), dense_[r]);
  return out;
}

int ThetaSeries::valuation() const {
  for (std::size_t r = 0; r < dense_.size(); ++r)
    if (!dense_[r].is_zero()) return index_->degree(r);
  return -1;
}

std::string ThetaSeries::to_string() const {
  auto all = terms();
  if (all.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : all) {
    std::string mono;
    for (int k = 0; k < dimension(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(k + 1);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    std::string body;
    bool negative = false;
    if (c.is_real() || sgn(c.re) == 0) {
      const bool imag = !c.is_real();
      const Rational& part = imag ? c.im : c.re;
      negative = sgn(part) < 0;
      Rational mag = abs(part);
      std::string factor = mag == 1 ? "" : walks::to_string(mag);
      if (imag) factor += factor.empty() ? "i" : "*i";
      if (mono.empty())
        body = factor.empty() ? "1" : factor;
      else
        body = factor.empty() ? mono : factor + "*" + mono;
    } else {
      body = "(" + walks::to_string(c) + ")" + (mono.empty() ? "" : "*" + mono);
    }
    if (first)
      os << (negative ? "-" : "") << body;
    else
      os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

ThetaSeries theta_exp_circle(int dimension, int k, int w_k, int truncation) {
  if (truncation < 0) throw std::invalid_argument("truncation must be non-negative");
  if (w_k != 1 && w_k != -1) throw std::invalid_argument("w_k must be +1 or -1");
  ThetaSeries s(dimension, truncation);
  Exponents e(dimension, 0);
  BigInt fact = 1;
  for (int m = 0; m <= truncation; ++m) {
    if (m > 0) fact *= m;
    e[k] = m;
    Rational mag = make_rational(BigInt(w_k), fact);
    // i^m cycles through 1, i, -1, -i.
    switch (m % 4) {
      case 0: s.set_coeff(e, GaussianRational(mag)); break;
      case 1: s.set_coeff(e, GaussianRational(Rational(0), mag)); break;
      case 2: s.set_coeff(e, GaussianRational(Rational(-mag))); break;
      default: s.set_coeff(e, GaussianRational(Rational(0), Rational(-mag))); break;
    }
  }
  return s;
}

ThetaSeries theta_exp_circle(int w_k, int truncation) { return theta_exp_circle(1, 0, w_k, truncation); }

namespace {

void require_no_constant(const ThetaSeries& s, const char* what) {
  if (!s.constant_term().is_zero())
    throw std::domain_error(std::string(what) + " needs a series with zero constant term");
}

}  // namespace

ThetaSeries theta_log1p(const ThetaSeries& s) {
  require_no_constant(s, "theta_log1p");
  ThetaSeries result(s.dimension(), s.max_total_degree());
  ThetaSeries power = s;
  for (long m = 1; !power.is_zero(); ++m) {
    result += power * GaussianRational(Rational(m % 2 == 1 ? 1 : -1, m));
    power = power * s;
  }
  return result;
}

ThetaSeries theta_binomial_series(const ThetaSeries& s, const Rational& a) {
  require_no_constant(s, "theta_binomial_series");
  ThetaSeries result = ThetaSeries::constant(s.dimension(), s.max_total_degree(), GaussianRational(1));
  ThetaSeries power = s;
  for (unsigned j = 1; !power.is_zero(); ++j) {
    Rational c = binomial(a, j);
    if (sgn(c) == 0) break;
    result += power * GaussianRational(c);
    power = power * s;
  }
  return result;
}

ThetaSeries theta_exp(const ThetaSeries& s) {
  require_no_constant(s, "theta_exp");
  ThetaSeries result = ThetaSeries::constant(s.dimension(), s.max_total_degree(), GaussianRational(1));
  ThetaSeries power = s;
  for (unsigned j = 1; !power.is_zero(); ++j) {
    result += power * GaussianRational(Rational(BigInt(1), factorial(j)));
    power = power * s;
  }
  return result;
}

GaussianMatrix theta_second_partials_at_zero(const ThetaSeries& s) {
  if (s.max_total_degree() < 2) throw std::invalid_argument("second partials need truncation degree >= 2");
  const int d = s.dimension();
  GaussianMatrix h(d, std::vector<GaussianRational>(d));
  Exponents e(d, 0);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      std::fill(e.begin(), e.end(), 0);
      ++e[j];
      ++e[k];
      GaussianRational c = s.coeff(e);
      if (j == k) c *= Rational(2);
      h[j][k] = c;
    }
  }
  return h;
}

ThetaSeries apply_diagonal_operator(const ThetaSeries& s, std::span<const Rational> inv_diag) {
  const int d = s.dimension();
  if (static_cast<int>(inv_diag.size()) != d) throw DimensionError("operator size mismatch");
  ThetaSeries out(d, s.max_total_degree());
  for (const auto& [e, c] : s.terms()) {
    for (int r = 0; r < d; ++r) {
      if (e[r] < 2) continue;
      Exponents f = e;
      f[r] -= 2;
      GaussianRational v = c;
      v *= Rational(-static_cast<long>(e[r]) * (e[r] - 1)) * inv_diag[r];
      out.set_coeff(f, out.coeff(f) + v);
    }
  }
  return out;
}

GaussianRational diagonal_operator_power_at_zero(const ThetaSeries& s, std::span<const Rational> inv_diag,
                                                 unsigned m) {
  const int d = s.dimension();
  if (static_cast<int>(inv_diag.size()) != d) throw DimensionError("operator size mismatch");
  if (static_cast<int>(2 * m) > s.max_total_degree())
    throw std::invalid_argument("truncation too low for operator power " + std::to_string(m));
  GaussianRational total;
  for (const auto& [e, c] : s.terms()) {
    if (total_degree(e) != static_cast<int>(2 * m)) continue;
    bool all_even = true;
    for (int v : e) all_even = all_even && (v % 2 == 0);
    if (!all_even) continue;
    Rational w(factorial(m));
    if (m % 2 == 1) w = -w;
    for (int r = 0; r < d; ++r) {
      const unsigned half = static_cast<unsigned>(e[r]) / 2;
      w *= make_rational(factorial(static_cast<unsigned>(e[r])), factorial(half));
      Rational p(1);
      for (unsigned i = 0; i < half; ++i) p *= inv_diag[r];
      w *= p;
    }
    GaussianRational term = c;
    term *= w;
    total += term;
  }
  return total;
}

}  // namespace walks
