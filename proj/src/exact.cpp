#include "walks/exact.hpp"

#include <algorithm>

namespace walks {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator*=(const Rational& o) {
  re *= o;
  im *= o;
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  const bool ar = sgn(a.re) != 0, ai = sgn(a.im) != 0;
  const bool br = sgn(b.re) != 0, bi = sgn(b.im) != 0;
  if (ar && br) re += a.re * b.re;
  if (ai && bi) re -= a.im * b.im;
  if (ar && bi) im += a.re * b.im;
  if (ai && br) im += a.im * b.re;
}

GaussianRational GaussianRational::inverse() const {
  Rational norm = re * re + im * im;
  if (sgn(norm) == 0) throw std::domain_error("division by zero Gaussian rational");
  return {re / norm, -im / norm};
}

std::string to_string(const GaussianRational& g) {
  if (g.is_real()) return to_string(g.re);
  std::string imag = to_string(abs(g.im)) + "i";
  if (sgn(g.re) == 0) return (sgn(g.im) < 0 ? "-" : "") + imag;
  return to_string(g.re) + (sgn(g.im) < 0 ? "-" : "+") + imag;
}

int total_degree(std::span<const int> e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational binomial(const Rational& a, unsigned j) {
  Rational r(1);
  for (unsigned i = 0; i < j; ++i) r *= a - Rational(i);
  r /= Rational(factorial(j));
  return r;
}

}  // namespace walks
