// Sparse Laurent polynomials with exact rational coefficients.
#pragma once

#include "walks/exact.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace walks {

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  explicit LaurentPoly(int dimension);

  static LaurentPoly constant(int dimension, const Rational& c);
  static LaurentPoly monomial(Exponents e, const Rational& c = Rational(1));
  /// z_k^power, with k zero-based.
  static LaurentPoly variable(int dimension, int k, int power = 1);

  int dimension() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Exponents& e) const;
  /// Adds c to the coefficient of z^e, erasing the entry if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  LaurentPoly pow(unsigned n) const;

  /// Evaluates at a point with every coordinate equal to +1 or -1.
  Rational eval_signs(std::span<const int> w) const;
  /// Evaluates at z = (1, ..., 1).
  Rational eval_ones() const;

  /// Replaces each exponent i_k by sigma_k * i_k (sigma_k = +1 or -1).
  LaurentPoly apply_sign_map(std::span<const int> sigma) const;
  /// Multiplies by the monomial z^shift.
  LaurentPoly shifted(std::span<const int> shift) const;

  /// Smallest exponent of z_k over all terms (0 for the zero polynomial).
  int min_exponent(int k) const;
  int max_exponent(int k) const;

  /// Canonical text form in graded-lex order, e.g. `x^-1 + x + 2*y^2`.
  std::string to_string() const;

 private:
  int dim_;
  TermMap terms_;
};

/// Variable names used by serialization: x,y,z for d <= 3, z1..zd otherwise.
std::string variable_name(int dimension, int k);

/// Free-function spelling of LaurentPoly::eval_signs.
Rational laurent_eval_signs(const LaurentPoly& p, std::span<const int> w);

}  // namespace walks
