// Kernel-method objects: the orbit sum R(z,t), the rational function G/H
// whose diagonal counts walks, its excursion variant, and truncated-series
// oracles that tie them to the DP counts.
#pragma once

#include "walks/enumerate.hpp"
#include "walks/laurent_poly.hpp"
#include "walks/stepset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walks {

enum class SeriesKind { walks, excursions };

std::string to_string(SeriesKind k);
SeriesKind parse_series_kind(const std::string& text);

/// numerator / (1 - t * P). For excursions the full function carries an
/// extra factor t^2, tracked as a shift of the reported index by two.
struct RationalFunctionSpec {
  SeriesKind kind = SeriesKind::walks;
  LaurentPoly numerator{1};
  LaurentPoly P{1};  // (z_1...z_d) * S(z), a genuine polynomial
  int index_shift() const { return kind == SeriesKind::excursions ? 2 : 0; }
  int dimension() const { return P.dimension(); }
};

RationalFunctionSpec build_walk_rational(const StepSet& s);
RationalFunctionSpec build_excursion_rational(const StepSet& s);
RationalFunctionSpec build_rational(const StepSet& s, SeriesKind kind);

/// Text form: `G = ...`, `H = 1 - t*(...)`, plus the t^2 factor for excursions.
std::string serialize(const RationalFunctionSpec& spec);

/// H = 1 - t*P as a polynomial in d+1 variables, t last.
LaurentPoly denominator_polynomial(const RationalFunctionSpec& spec);
/// Euler operator v * d/dv in variable k.
LaurentPoly euler_derivative(const LaurentPoly& p, int k);
/// t * H_t == H - 1, checked as an exact polynomial identity.
bool smoothness_identity_holds(const RationalFunctionSpec& spec);

/// R(z,t) = numerator / (monomial * (1 - t S)).
struct OrbitSum {
  LaurentPoly numerator{1};  // (z_1 - 1/z_1) ... (z_d - 1/z_d)
  LaurentPoly monomial{1};   // z_1 ... z_d
  LaurentPoly S{1};
};

OrbitSum build_orbit_sum(const StepSet& s);
/// sum over sign maps of sgn(sigma) * sigma(z_1...z_d), expanded term by term.
LaurentPoly signed_orbit_of_monomial(int dimension);

/// Coefficient of t^n, n = 0..order, of a series in t with Laurent
/// polynomial coefficients in z.
struct SeriesTable {
  int order = 0;
  std::vector<LaurentPoly> coeffs;
};

struct ExpandOptions {
  /// Drop exponents that can no longer reach a diagonal term of index <= N.
  /// Safe because P has no negative exponents.
  bool prune = false;
  Exec exec = default_exec();
};

/// c_0 = numerator, c_n = P * c_{n-1}; coefficient n of the table is c_n.
SeriesTable series_expand(const RationalFunctionSpec& spec, int order, const ExpandOptions& options = {});

/// Entry n is [z^(m,...,m)] c_n with m = n + index shift.
std::vector<BigInt> diagonal_coeffs(const RationalFunctionSpec& spec, int order, const ExpandOptions& options = {});

/// R_n = (1 - 1/z_1^2) ... (1 - 1/z_d^2) * S^n.
SeriesTable orbit_sum_series(const StepSet& s, int order);

/// Keeps the monomials with non-negative exponents in every selected axis
/// (zero-based); an empty axis list selects all axes.
SeriesTable positive_part(const SeriesTable& table, std::vector<int> axes = {});

struct Discrepancy {
  int n = 0;
  Exponents monomial;
  Rational lhs;
  Rational rhs;
  std::string describe() const;
};

struct CheckResult {
  bool ok = true;
  std::optional<Discrepancy> first;
};

/// Both sides of the orbit-sum identity, coefficient by coefficient in t,
/// with F given by endpoint-resolved counts.
CheckResult verify_orbit_sum_identity(const StepSet& s, const SeriesTable& F, int order);
/// Endpoint-resolved counts as a SeriesTable (F(z,t) truncated at the table's length).
SeriesTable endpoint_table(const CountTable& table);

/// [z>=] R evaluated at z = 1 against the diagonal of
/// R(1/z, (z_1...z_d) t) / ((1-z_1)...(1-z_d)).
CheckResult verify_pospart_to_diagonal(const StepSet& s, int order);

/// Compares two integer sequences entry by entry.
CheckResult compare_sequences(const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs, int dimension);

}  // namespace walks
