// Exact constants q * sqrt(r) * pi^(h/2) with q rational, r a square-free
// positive integer and h an integer.
#pragma once

#include "walks/exact.hpp"
#include "walks/real.hpp"

#include <string>

namespace walks {

class SurdConstant {
 public:
  SurdConstant() = default;
  /// Canonicalizes: square factors of the radicand move into q.
  SurdConstant(Rational q, Rational radicand, int pi_half_power);

  static SurdConstant zero(int pi_half_power = 0) { return {Rational(0), Rational(1), pi_half_power}; }

  const Rational& q() const { return q_; }
  const BigInt& radicand() const { return radicand_; }
  int pi_half_power() const { return pi_half_power_; }
  bool is_zero() const { return sgn(q_) == 0; }

  /// Sum of two constants with the same radicand and power of pi (or a zero).
  SurdConstant& operator+=(const SurdConstant& o);
  SurdConstant& operator*=(const Rational& c);
  friend SurdConstant operator+(SurdConstant a, const SurdConstant& b) { return a += b; }
  friend SurdConstant operator*(SurdConstant a, const Rational& c) { return a *= c; }
  friend SurdConstant operator*(const SurdConstant& a, const SurdConstant& b);
  friend SurdConstant operator-(SurdConstant a) { return a *= Rational(-1); }

  /// Zeros compare equal regardless of radicand and power of pi.
  friend bool operator==(const SurdConstant& a, const SurdConstant& b);

  Real value(mpfr_prec_t prec = Real::default_precision) const;
  std::string decimal(int digits = 12) const { return value().to_string(digits); }

  /// Forms like `4/π`, `605√6/(512π)`, `4√2·π^{-3/2}`.
  std::string to_string() const;

 private:
  Rational q_{0};
  BigInt radicand_{1};
  int pi_half_power_ = 0;
};

/// Largest m with m^2 dividing n, plus the square-free cofactor.
std::pair<BigInt, BigInt> square_free_split(const BigInt& n);

}  // namespace walks
