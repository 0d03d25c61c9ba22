#include "walks/surd.hpp"

#include <sstream>
#include <stdexcept>

namespace walks {

std::pair<BigInt, BigInt> square_free_split(const BigInt& n) {
  if (sgn(n) <= 0) throw std::domain_error("square-free split needs a positive integer");
  BigInt rest = n, outside = 1;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    return {root, 1};
  }
  for (unsigned long p = 2; p <= 1000000 && BigInt(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    const BigInt pp = BigInt(p) * p;
    while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t())) {
      rest /= pp;
      outside *= p;
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    return {outside * root, 1};
  }
  return {outside, rest};
}

SurdConstant::SurdConstant(Rational q, Rational radicand, int pi_half_power)
    : q_(std::move(q)), pi_half_power_(pi_half_power) {
  if (sgn(radicand) < 0) throw std::domain_error("negative radicand");
  if (sgn(q_) == 0 || sgn(radicand) == 0) {
    q_ = 0;
    radicand_ = 1;
    return;
  }
  // sqrt(a/b) = sqrt(a*b)/b
  const BigInt a = radicand.get_num(), b = radicand.get_den();
  auto [outside, inside] = square_free_split(a * b);
  q_ *= make_rational(outside, b);
  radicand_ = inside;
}

SurdConstant& SurdConstant::operator+=(const SurdConstant& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (radicand_ != o.radicand_ || pi_half_power_ != o.pi_half_power_)
    throw std::domain_error("cannot add " + to_string() + " and " + o.to_string() + " exactly");
  q_ += o.q_;
  if (sgn(q_) == 0) radicand_ = 1;
  return *this;
}

SurdConstant& SurdConstant::operator*=(const Rational& c) {
  q_ *= c;
  if (sgn(q_) == 0) radicand_ = 1;
  return *this;
}

SurdConstant operator*(const SurdConstant& a, const SurdConstant& b) {
  return {a.q_ * b.q_, Rational(a.radicand_ * b.radicand_), a.pi_half_power_ + b.pi_half_power_};
}

bool operator==(const SurdConstant& a, const SurdConstant& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.q_ == b.q_ && a.radicand_ == b.radicand_ && a.pi_half_power_ == b.pi_half_power_;
}

Real SurdConstant::value(mpfr_prec_t prec) const {
  Real v(q_, prec);
  if (is_zero()) return v;
  v *= Real(radicand_, prec).sqrt();
  v *= Real::pi(prec).pow_half(pi_half_power_);
  return v;
}

namespace {

std::string magnitude_with_root(const BigInt& num, const BigInt& radicand) {
  std::string out;
  if (num != 1 || radicand == 1) out = num.get_str();
  if (radicand != 1) out += "√" + radicand.get_str();
  return out;
}

std::string pi_power_text(int h) {
  if (h % 2 == 0) return std::to_string(h / 2);
  return std::to_string(h) + "/2";
}

}  // namespace

std::string SurdConstant::to_string() const {
  if (is_zero()) return "0";
  const std::string sign = sgn(q_) < 0 ? "-" : "";
  const BigInt num = abs(q_.get_num());
  const BigInt& den = q_.get_den();
  const std::string top = magnitude_with_root(num, radicand_);

  if (pi_half_power_ == 0) return sign + top + (den == 1 ? "" : "/" + den.get_str());
  if (pi_half_power_ == -2) {
    if (den == 1) return sign + top + "/π";
    return sign + top + "/(" + den.get_str() + "π)";
  }
  if (pi_half_power_ == 2) {
    std::string body = (top == "1" ? std::string() : top) + "π";
    return sign + body + (den == 1 ? "" : "/" + den.get_str());
  }
  std::string coeff = top + (den == 1 ? "" : "/" + den.get_str());
  return sign + coeff + "·π^{" + pi_power_text(pi_half_power_) + "}";
}

}  // namespace walks
