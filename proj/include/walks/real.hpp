// Minimal RAII wrapper over an MPFR float, used only to render exact
// constants as decimals and to compare predictions with counts.
#pragma once

#include "walks/exact.hpp"

#include <mpfr.h>

#include <string>

namespace walks {

class Real {
 public:
  static constexpr mpfr_prec_t default_precision = 320;

  Real() : Real(0L) {}
  Real(long v, mpfr_prec_t prec = default_precision);  // NOLINT(google-explicit-constructor)
  explicit Real(const BigInt& v, mpfr_prec_t prec = default_precision);
  explicit Real(const Rational& v, mpfr_prec_t prec = default_precision);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(Real o) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t prec = default_precision);
  static Real zero(mpfr_prec_t prec) { return Real(0L, prec); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

  Real sqrt() const;
  Real abs() const;
  /// this^e for a signed integer exponent.
  Real pow(long e) const;
  /// this^(num/2), for half-integer powers of positive values.
  Real pow_half(long num) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 12) const;

  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace walks
