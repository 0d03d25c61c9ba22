// Exact scalar types shared by every module: GMP integers and rationals,
// Gaussian rationals, and exponent vectors with the canonical term order.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace walks {

using BigInt = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, positive denominator

/// Builds a canonical rational from a numerator/denominator pair.
Rational make_rational(const BigInt& num, const BigInt& den);

/// `num/den`, or just `num` when the denominator is one.
std::string to_string(const Rational& q);

/// Parses `num` or `num/den`; throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& text);

/// Element of Q(i). Field arithmetic is exact.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static GaussianRational i_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator*=(const Rational& o);
  /// Accumulates a*b into *this without temporaries for the zero parts.
  void add_product(const GaussianRational& a, const GaussianRational& b);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  GaussianRational inverse() const;
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) { return a * b.inverse(); }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// `a+bi` form; purely real or purely imaginary values drop the other part.
std::string to_string(const GaussianRational& g);

/// Exponent vector of a monomial; entries may be negative for Laurent monomials.
using Exponents = std::vector<int>;

int total_degree(std::span<const int> e);

/// Canonical term order: ascending total degree, ties broken by descending
/// lexicographic order (so x precedes y within a degree).
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Falling/rising factorial helpers over BigInt.
BigInt factorial(unsigned n);

/// Generalized binomial coefficient binom(a, j) for rational a.
Rational binomial(const Rational& a, unsigned j);

/// Thrown when a precondition on dimensions or shapes is violated.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace walks
