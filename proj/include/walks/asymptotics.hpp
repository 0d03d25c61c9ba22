// Saddle-point asymptotics at the minimal points w in {+1,-1}^d of the
// walk and excursion diagonals.
#pragma once

#include "walks/diagonal.hpp"
#include "walks/enumerate.hpp"
#include "walks/stepset.hpp"
#include "walks/surd.hpp"
#include "walks/theta_series.hpp"

#include <optional>
#include <vector>

namespace walks {

struct MinimalPoint {
  std::vector<int> w;
  Rational Sw;                 // S(w) = +-|S|
  Rational tw;                 // 1 / (w_1...w_d * S(w))
  long base = 0;               // S(w) as an integer
  int vanishing_order = 0;     // order of the numerator at w
  std::vector<Rational> s1;    // S1^(k)(w), k = 1..d
};

/// Sign vectors with |S(w)| = |S|, in sign_vectors order (so w = 1 first).
std::vector<MinimalPoint> minimal_points(const StepSet& s, SeriesKind kind = SeriesKind::walks);

/// Determinant of the phase Hessian, 2^d * prod(w_k S1^(k)(w)) / S(w)^d.
Rational hessian_det(const StepSet& s, const MinimalPoint& w);

/// Phase log S(w) - log S(w e^{i theta}) as a truncated series.
ThetaSeries phase_series(const StepSet& s, const std::vector<int>& w, int truncation);

/// Second partials of the phase at 0; throws unless diagonal and real, and
/// unless the determinant agrees with hessian_det.
std::vector<Rational> phase_hessian_diagonal(const StepSet& s, const MinimalPoint& w);

/// (s^(1)...s^(d))^(-1/2) * pi^(-d/2) * |S|^(d/2).
SurdConstant leading_constant(const StepSet& s);

/// (2 pi)^(-d/2) * H^(-1/2) * G / (t H_t) at (1,...,1, 1/|S|). Equals
/// -leading_constant: the saddle-point amplitude carries the opposite sign.
SurdConstant domterm_constant(const StepSet& s);

struct PointTerm {
  int l = 0;  // coefficient of n^(-(d+l)/2)
  SurdConstant c;
};

struct PointOptions {
  int theta_truncation = -1;        // -1: 6 * (correction count) + 2
  bool repeated_operator = false;   // apply the operator step by step instead of the closed form
  Exec exec = default_exec();
};

struct PointContribution {
  MinimalPoint point;
  std::vector<Rational> L;   // L_0, L_1, ... (all exactly real)
  std::vector<PointTerm> terms;
};

/// Contribution of one minimal point, before the factor (S(w)/|S|)^n.
/// Walks: terms l = 0, 2, ..., 2(terms-1). Excursions: the first d terms
/// vanish and terms l = 0, 2, ..., 2(d + terms - 1) are returned.
PointContribution point_contribution(const StepSet& s, const MinimalPoint& w, int n_terms, SeriesKind kind,
                                     const PointOptions& options = {});

struct ExpansionTerm {
  int l = 0;
  SurdConstant even;  // multiplies |S|^n n^(-(d+l)/2)
  SurdConstant odd;   // multiplies (-1)^n |S|^n n^(-(d+l)/2)
};

struct AsymptoticExpansion {
  SeriesKind kind = SeriesKind::walks;
  long base = 0;
  int dimension = 0;
  int n_terms = 0;
  std::vector<ExpansionTerm> terms;
  std::vector<PointContribution> points;

  /// Index of the first term with a nonzero part (terms.size() if none).
  std::size_t leading_index() const;
  /// Prediction from the first `count` terms.
  Real predict(long n, std::size_t count) const;
};

AsymptoticExpansion walk_asymptotics(const StepSet& s, int n_terms, const PointOptions& options = {});
AsymptoticExpansion excursion_asymptotics(const StepSet& s, int n_terms, const PointOptions& options = {});
AsymptoticExpansion asymptotics(const StepSet& s, int n_terms, SeriesKind kind, const PointOptions& options = {});

struct DeviationSample {
  long n = 0;
  Real observed;
  Real predicted;
  Real scaled_residual;   // (observed - predicted) / (|S|^n n^(-(d+l_next)/2))
  Real relative_error;    // |observed - predicted| / |observed|, 0 when observed is 0
};

struct DeviationReport {
  std::size_t terms_used = 0;
  int l_next = 0;
  std::vector<DeviationSample> samples;
  Real max_abs_scaled;
  Real max_relative;
};

/// Compares the first `terms_used` terms (0 = all) with table counts for n in
/// [lo, hi]; `step` = 2 restricts to one parity. Throws if the window exceeds
/// the table.
DeviationReport compare_with_dp(const AsymptoticExpansion& e, const CountTable& table, long lo, long hi,
                                std::size_t terms_used = 0, long step = 1);

}  // namespace walks
