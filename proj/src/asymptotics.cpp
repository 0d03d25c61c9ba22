#include "walks/asymptotics.hpp"

#include <exception>
#include <sstream>

namespace walks {

namespace {

Rational rational_pow(const Rational& x, long e) {
  Rational r(1);
  const bool invert = e < 0;
  for (long i = 0; i < (invert ? -e : e); ++i) r *= x;
  return invert ? Rational(1) / r : r;
}

long sign_product(const std::vector<int>& w) {
  long p = 1;
  for (int v : w) p *= v;
  return p;
}

std::string point_text(const std::vector<int>& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + std::to_string(w[k]);
  return out + ")";
}

// i^m
GaussianRational i_power(int m) {
  switch (m % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i_unit();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i_unit();
  }
}

// S(w e^{i theta}) / S(w)
ThetaSeries ratio_series(const StepSet& s, const std::vector<int>& w, const Rational& Sw, int truncation) {
  const int d = s.dimension();
  ThetaSeries out(d, truncation);
  auto index = MonomialIndex::get(d, truncation);
  for (std::size_t r = 0; r < index->size(); ++r) {
    const Exponents& a = index->exponents(r);
    Rational sum(0);
    for (const auto& step : s.steps()) {
      long wsign = 1;
      BigInt mono = 1;
      for (int k = 0; k < d; ++k) {
        if (step[k] != 0 && w[k] < 0) wsign = -wsign;
        if (a[k] > 0) {
          if (step[k] == 0) {
            mono = 0;
            break;
          }
          if (step[k] < 0 && a[k] % 2 == 1) mono = -mono;
        }
      }
      if (mono != 0) sum += Rational(mono * wsign);
    }
    if (sgn(sum) == 0) continue;
    BigInt denom = 1;
    for (int v : a) denom *= factorial(static_cast<unsigned>(v));
    GaussianRational c = i_power(total_degree(a));
    c *= sum / Sw / Rational(denom);
    out.set_coeff(a, c);
  }
  return out;
}

// exp(c * i * theta_k) in variable k.
ThetaSeries exp_linear(int d, int k, long c, int truncation) {
  ThetaSeries out(d, truncation);
  Exponents e(d, 0);
  BigInt power = 1;
  for (int m = 0; m <= truncation; ++m) {
    e[k] = m;
    GaussianRational v = i_power(m);
    v *= make_rational(power, factorial(static_cast<unsigned>(m)));
    out.set_coeff(e, v);
    power *= c;
  }
  return out;
}

ThetaSeries amplitude(const StepSet& s, const MinimalPoint& p, const ThetaSeries& ratio_minus_one, SeriesKind kind,
                      int truncation) {
  const int d = s.dimension();
  ThetaSeries u = ThetaSeries::constant(d, truncation, GaussianRational(1));
  const ThetaSeries one = ThetaSeries::constant(d, truncation, GaussianRational(1));
  if (kind == SeriesKind::walks) {
    // G(w e^{i theta}) = prod (1 + w_k e^{i theta_k}); equals -G/(t H_t) on the variety.
    for (int k = 0; k < d; ++k) u = u * (one + theta_exp_circle(d, k, p.w[k], truncation));
    return u;
  }
  // t(z)^2 prod(z_k^2 - 1) with t(z) = 1/(z_1...z_d S(z)) and w_k^2 = 1.
  for (int k = 0; k < d; ++k) u = u * (one - exp_linear(d, k, -2, truncation));
  u = u * theta_binomial_series(ratio_minus_one, Rational(-2));
  u *= GaussianRational(Rational(1) / (p.Sw * p.Sw));
  return u;
}

}  // namespace

std::vector<MinimalPoint> minimal_points(const StepSet& s, SeriesKind kind) {
  const int d = s.dimension();
  const LaurentPoly S = inventory(s);
  const Rational size(static_cast<long>(s.size()));
  std::vector<InventoryDecomposition> decs;
  for (int k = 0; k < d; ++k) decs.push_back(decompose(s, k));

  std::vector<MinimalPoint> out;
  for (const auto& w : sign_vectors(d)) {
    const Rational Sw = S.eval_signs(w);
    if (abs(Sw) != size) continue;
    MinimalPoint p;
    p.w = w;
    p.Sw = Sw;
    p.tw = Rational(1) / (Sw * sign_product(w));
    p.base = Sw.get_num().get_si();
    p.vanishing_order = 0;
    for (int v : w) p.vanishing_order += v < 0;
    if (kind == SeriesKind::excursions) p.vanishing_order = d;
    for (int k = 0; k < d; ++k) {
      p.s1.push_back(decs[k].s1.eval_signs(w));
      if (sgn(p.s1.back()) == 0)
        throw std::logic_error("degenerate minimal point " + point_text(w) + ": S1^(" + std::to_string(k + 1) +
                               ") vanishes");
    }
    out.push_back(std::move(p));
  }
  if (out.empty() || out.front().w != std::vector<int>(d, 1))
    throw std::logic_error("(1,...,1) is not minimal; the model hypotheses are violated");
  return out;
}

Rational hessian_det(const StepSet& s, const MinimalPoint& w) {
  const int d = s.dimension();
  Rational det = rational_pow(Rational(2), d) / rational_pow(w.Sw, d);
  for (int k = 0; k < d; ++k) det *= w.s1[k] * w.w[k];
  return det;
}

ThetaSeries phase_series(const StepSet& s, const std::vector<int>& w, int truncation) {
  const Rational Sw = inventory(s).eval_signs(w);
  ThetaSeries r = ratio_series(s, w, Sw, truncation);
  r -= ThetaSeries::constant(s.dimension(), truncation, GaussianRational(1));
  return theta_log1p(r) * GaussianRational(-1);
}

namespace {

std::vector<Rational> hessian_from_phase(const StepSet& s, const MinimalPoint& w, const ThetaSeries& phase) {
  const int d = s.dimension();
  const GaussianMatrix h = theta_second_partials_at_zero(phase);
  std::vector<Rational> diag;
  Rational det(1);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      if (j != k && !h[j][k].is_zero())
        throw std::logic_error("phase Hessian at " + point_text(w.w) + " is not diagonal");
    }
    if (!h[j][j].is_real()) throw std::logic_error("phase Hessian at " + point_text(w.w) + " is not real");
    diag.push_back(h[j][j].re);
    det *= h[j][j].re;
  }
  if (det != hessian_det(s, w))
    throw std::logic_error("phase Hessian determinant " + to_string(det) + " disagrees with the closed form " +
                           to_string(hessian_det(s, w)) + " at " + point_text(w.w));
  return diag;
}

}  // namespace

std::vector<Rational> phase_hessian_diagonal(const StepSet& s, const MinimalPoint& w) {
  return hessian_from_phase(s, w, phase_series(s, w.w, 2));
}

SurdConstant leading_constant(const StepSet& s) {
  const int d = s.dimension();
  BigInt prod = 1;
  for (long c : forward_counts(s)) prod *= c;
  const Rational size(static_cast<long>(s.size()));
  return {Rational(1), rational_pow(size, d) / Rational(prod), -d};
}

SurdConstant domterm_constant(const StepSet& s) {
  const int d = s.dimension();
  const MinimalPoint p = minimal_points(s).front();
  const Rational H = hessian_det(s, p);
  // At (1, 1/|S|): G = 2^d and t H_t = -t P(1) = -1.
  const Rational G = rational_pow(Rational(2), d);
  const Rational tHt(-1);
  // (2 pi)^(-d/2) H^(-1/2) = pi^(-d/2) sqrt(1 / (2^d H))
  return SurdConstant(G / tHt, Rational(1) / (rational_pow(Rational(2), d) * H), -d);
}

PointContribution point_contribution(const StepSet& s, const MinimalPoint& w, int n_terms, SeriesKind kind,
                                     const PointOptions& options) {
  if (n_terms < 1) throw std::invalid_argument("at least one term is required");
  const int d = s.dimension();
  const int kmax = kind == SeriesKind::walks ? n_terms - 1 : d + n_terms - 1;
  const int truncation = options.theta_truncation >= 0 ? options.theta_truncation : 6 * (kmax + 1) + 2;
  if (truncation < std::max(2, 6 * kmax))
    throw std::invalid_argument("theta truncation " + std::to_string(truncation) + " is too low for " +
                                std::to_string(kmax + 1) + " correction terms");

  ThetaSeries ratio = ratio_series(s, w.w, w.Sw, truncation);
  ratio -= ThetaSeries::constant(d, truncation, GaussianRational(1));
  const ThetaSeries phase = theta_log1p(ratio) * GaussianRational(-1);
  const std::vector<Rational> hess = hessian_from_phase(s, w, phase);

  ThetaSeries g = phase;
  std::vector<Rational> inv;
  for (int r = 0; r < d; ++r) {
    Exponents e(d, 0);
    e[r] = 2;
    g.set_coeff(e, g.coeff(e) - GaussianRational(hess[r] / 2));
    inv.push_back(Rational(1) / hess[r]);
  }
  const ThetaSeries u = amplitude(s, w, ratio, kind, truncation);

  std::vector<GaussianRational> L(static_cast<std::size_t>(kmax + 1));
  ThetaSeries ug = u;  // u * g^r, kept only to the degree still needed
  for (int r = 0; r <= 2 * kmax; ++r) {
    const int needed = std::min(truncation, 2 * (r + kmax));
    if (r > 0) ug = ug.truncated(needed).multiply(g.truncated(needed), options.exec);
    std::vector<GaussianRational> at_zero;  // D^m(u g^r)(0), m = 0..r+kmax
    if (options.repeated_operator) {
      ThetaSeries cur = ug;
      for (int m = 0; m <= r + kmax && 2 * m <= cur.max_total_degree(); ++m) {
        at_zero.push_back(cur.constant_term());
        cur = apply_diagonal_operator(cur, inv);
      }
    } else {
      for (int m = 0; m <= r + kmax; ++m)
        at_zero.push_back(2 * m <= ug.max_total_degree() ? diagonal_operator_power_at_zero(ug, inv, static_cast<unsigned>(m))
                                              : GaussianRational());
    }
    for (int k = (r + 1) / 2; k <= kmax; ++k) {
      const int m = r + k;
      Rational denom = rational_pow(Rational(2), m) * Rational(factorial(static_cast<unsigned>(r))) *
                       Rational(factorial(static_cast<unsigned>(m)));
      if (k % 2 == 1) denom = -denom;
      GaussianRational v = at_zero[static_cast<std::size_t>(m)];
      v *= Rational(1) / denom;
      L[static_cast<std::size_t>(k)] += v;
    }
  }

  PointContribution out;
  out.point = w;
  for (int k = 0; k <= kmax; ++k) {
    if (!L[k].is_real())
      throw std::logic_error("L_" + std::to_string(k) + " at " + point_text(w.w) + " has imaginary part " +
                             to_string(L[k].im));
    out.L.push_back(L[k].re);
  }

  Rational det(1);
  for (const auto& h : hess) det *= h;
  // (2 pi)^(-d/2) det^(-1/2)
  const SurdConstant prefactor(Rational(1), Rational(1) / (rational_pow(Rational(2), d) * det), -d);

  if (kind == SeriesKind::walks) {
    for (int k = 0; k <= kmax; ++k) out.terms.push_back({2 * k, prefactor * out.L[k]});
    return out;
  }
  // Index n + 2: (n+2)^(-(d/2+k)) = sum_j binom(-(d/2+k), j) 2^j n^(-(d/2+k+j)),
  // and S(w)^(n+2) = S(w)^n |S|^2.
  const Rational shift_factor = w.Sw * w.Sw;
  for (int m = 0; m <= kmax; ++m) {
    Rational c(0);
    for (int k = 0; k <= m; ++k) {
      const int j = m - k;
      c += out.L[k] * binomial(Rational(-(d + 2 * k), 2), static_cast<unsigned>(j)) *
           rational_pow(Rational(2), j);
    }
    if (m < d && sgn(c) != 0)
      throw std::logic_error("excursion term n^(-" + std::to_string(d + 2 * m) + "/2) at " + point_text(w.w) +
                             " does not vanish");
    out.terms.push_back({2 * m, prefactor * (c * shift_factor)});
  }
  return out;
}

std::size_t AsymptoticExpansion::leading_index() const {
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (!terms[i].even.is_zero() || !terms[i].odd.is_zero()) return i;
  return terms.size();
}

Real AsymptoticExpansion::predict(long n, std::size_t count) const {
  if (n <= 0) throw std::invalid_argument("prediction needs n >= 1");
  count = std::min(count, terms.size());
  Real sum(0L);
  const Real nn(n);
  for (std::size_t i = 0; i < count; ++i) {
    Real c = terms[i].even.value();
    if (n % 2 == 0)
      c += terms[i].odd.value();
    else
      c -= terms[i].odd.value();
    sum += c * nn.pow_half(-(dimension + terms[i].l));
  }
  return sum * Real(base).pow(n);
}

namespace {

AsymptoticExpansion assemble(const StepSet& s, int n_terms, SeriesKind kind, const PointOptions& options) {
  const auto points = minimal_points(s, kind);
  std::vector<PointContribution> contributions(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  const auto count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      contributions[i] = point_contribution(s, points[i], n_terms, kind, options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  AsymptoticExpansion out;
  out.kind = kind;
  out.base = static_cast<long>(s.size());
  out.dimension = s.dimension();
  out.n_terms = n_terms;
  const std::size_t nt = contributions.front().terms.size();
  for (std::size_t i = 0; i < nt; ++i) {
    ExpansionTerm t;
    t.l = contributions.front().terms[i].l;
    t.even = SurdConstant::zero(-s.dimension());
    t.odd = SurdConstant::zero(-s.dimension());
    for (const auto& c : contributions) {
      if (c.point.base > 0)
        t.even += c.terms[i].c;
      else
        t.odd += c.terms[i].c;
    }
    out.terms.push_back(t);
  }
  out.points = std::move(contributions);
  return out;
}

}  // namespace

AsymptoticExpansion walk_asymptotics(const StepSet& s, int n_terms, const PointOptions& options) {
  AsymptoticExpansion e = assemble(s, n_terms, SeriesKind::walks, options);
  if (!(e.terms.front().even == leading_constant(s)))
    throw std::logic_error("leading walk term " + e.terms.front().even.to_string() +
                           " disagrees with the closed form " + leading_constant(s).to_string());
  return e;
}

AsymptoticExpansion excursion_asymptotics(const StepSet& s, int n_terms, const PointOptions& options) {
  AsymptoticExpansion e = assemble(s, n_terms, SeriesKind::excursions, options);
  const int d = s.dimension();
  for (const auto& t : e.terms)
    if (t.l < 2 * d && (!t.even.is_zero() || !t.odd.is_zero()))
      throw std::logic_error("excursion expansion has a nonzero term above n^(-3d/2)");
  return e;
}

AsymptoticExpansion asymptotics(const StepSet& s, int n_terms, SeriesKind kind, const PointOptions& options) {
  return kind == SeriesKind::walks ? walk_asymptotics(s, n_terms, options) : excursion_asymptotics(s, n_terms, options);
}

DeviationReport compare_with_dp(const AsymptoticExpansion& e, const CountTable& table, long lo, long hi,
                                std::size_t terms_used, long step) {
  if (lo < 1 || hi < lo || step < 1) throw std::invalid_argument("bad comparison window");
  if (hi > table.max_length())
    throw std::out_of_range("window end " + std::to_string(hi) + " exceeds the table length " +
                            std::to_string(table.max_length()));
  if (terms_used == 0 || terms_used > e.terms.size()) terms_used = e.terms.size();
  const auto& observed = e.kind == SeriesKind::walks ? table.totals() : table.excursions();

  DeviationReport rep;
  rep.terms_used = terms_used;
  rep.l_next = e.terms[terms_used - 1].l + 2;
  rep.max_abs_scaled = Real(0L);
  rep.max_relative = Real(0L);
  for (long n = lo; n <= hi; n += step) {
    DeviationSample smp;
    smp.n = n;
    smp.observed = Real(observed[static_cast<std::size_t>(n)]);
    smp.predicted = e.predict(n, terms_used);
    const Real residual = smp.observed - smp.predicted;
    const Real scale = Real(e.base).pow(n) * Real(n).pow_half(-(e.dimension + rep.l_next));
    smp.scaled_residual = residual / scale;
    smp.relative_error = sgn(observed[static_cast<std::size_t>(n)]) == 0 ? Real(0L) : (residual / smp.observed).abs();
    if (rep.max_abs_scaled < smp.scaled_residual.abs()) rep.max_abs_scaled = smp.scaled_residual.abs();
    if (rep.max_relative < smp.relative_error) rep.max_relative = smp.relative_error;
    rep.samples.push_back(std::move(smp));
  }
  return rep;
}

}  // namespace walks
