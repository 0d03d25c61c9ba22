// Truncated multivariate Taylor series in theta_1..theta_d with Gaussian
// rational coefficients. Products discard every term of total degree above
// the truncation degree.
#pragma once

#include "walks/exact.hpp"
#include "walks/kernels.hpp"

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace walks {

using GaussianMatrix = std::vector<std::vector<GaussianRational>>;

class ThetaSeries {
 public:
  using Term = std::pair<Exponents, GaussianRational>;

  ThetaSeries(int dimension, int max_total_degree);

  static ThetaSeries constant(int dimension, int max_total_degree, const GaussianRational& c);
  static ThetaSeries monomial(int max_total_degree, const Exponents& e, const GaussianRational& c);

  int dimension() const { return index_->dim(); }
  int max_total_degree() const { return index_->max_degree(); }

  /// Nonzero terms in canonical graded-lex order.
  std::vector<Term> terms() const;
  std::size_t term_count() const;
  bool is_zero() const { return term_count() == 0; }

  GaussianRational coeff(std::span<const int> e) const;
  GaussianRational constant_term() const { return dense_.front(); }
  void set_coeff(std::span<const int> e, const GaussianRational& c);

  ThetaSeries& operator+=(const ThetaSeries& o);
  ThetaSeries& operator-=(const ThetaSeries& o);
  ThetaSeries& operator*=(const GaussianRational& c);
  friend ThetaSeries operator+(ThetaSeries a, const ThetaSeries& b) { return a += b; }
  friend ThetaSeries operator-(ThetaSeries a, const ThetaSeries& b) { return a -= b; }
  friend ThetaSeries operator*(ThetaSeries a, const GaussianRational& c) { return a *= c; }
  friend ThetaSeries operator*(const ThetaSeries& a, const ThetaSeries& b) { return a.multiply(b, default_exec()); }
  friend bool operator==(const ThetaSeries& a, const ThetaSeries& b);

  ThetaSeries multiply(const ThetaSeries& o, Exec exec) const;
  /// Keeps terms of total degree <= degree, in a series of that truncation.
  ThetaSeries truncated(int degree) const;

  /// Lowest total degree carrying a nonzero coefficient (-1 for zero).
  int valuation() const;

  /// Canonical text form, e.g. `1 + i*t1 - 1/2*t1^2`.
  std::string to_string() const;

 private:
  void check_compatible(const ThetaSeries& o) const;

  std::shared_ptr<const MonomialIndex> index_;
  std::vector<GaussianRational> dense_;
};

/// Univariate embedding of w * exp(i*theta_k) truncated at `truncation`,
/// placed in variable k of a d-variate series.
ThetaSeries theta_exp_circle(int dimension, int k, int w_k, int truncation);
/// Single-variable convenience form (d = 1, k = 0).
ThetaSeries theta_exp_circle(int w_k, int truncation);

/// log(1 + s) for a series without constant term.
ThetaSeries theta_log1p(const ThetaSeries& s);

/// (1 + s)^a via the binomial series, for a series without constant term.
ThetaSeries theta_binomial_series(const ThetaSeries& s, const Rational& a);

/// exp(s) for a series without constant term.
ThetaSeries theta_exp(const ThetaSeries& s);

/// Second partial derivatives at theta = 0 read off the degree-2 coefficients.
GaussianMatrix theta_second_partials_at_zero(const ThetaSeries& s);

/// Applies -sum_r inv_diag[r] * d^2/dtheta_r^2 once. The result keeps the
/// input's truncation degree; its top two degrees are unreliable.
ThetaSeries apply_diagonal_operator(const ThetaSeries& s, std::span<const Rational> inv_diag);

/// Value at theta = 0 of the m-th power of the operator above, computed in
/// closed form from the degree-2m coefficients.
GaussianRational diagonal_operator_power_at_zero(const ThetaSeries& s, std::span<const Rational> inv_diag,
                                                 unsigned m);

}  // namespace walks
