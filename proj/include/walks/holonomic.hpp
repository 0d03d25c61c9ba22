// Verification of externally supplied annihilating operators: linear ODEs in
// t acting on sum c_n t^n, and linear recurrences acting on (c_n).
#pragma once

#include "walks/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walks {

/// Integer polynomial, lowest degree first.
using IntPoly = std::vector<BigInt>;

int degree(const IntPoly& p);  // -1 for the zero polynomial
BigInt eval(const IntPoly& p, const BigInt& x);

/// sum_j p_j(t) D_t^j
struct OdeSpec {
  std::string model;
  std::vector<IntPoly> coeffs;  // p_0 .. p_m
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  int max_degree() const;
};

/// sum_j q_j(n) c_{n+j} = 0
struct RecurrenceSpec {
  std::string model;
  std::vector<IntPoly> coeffs;  // q_0 .. q_r
  int span() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Parse the JSON forms {"model", "order", "coefficients"} and
/// {"model", "span", "coefficients"}; coefficients are lists of integers
/// (numbers or decimal strings), lowest degree first.
OdeSpec parse_ode_json(const std::string& text);
RecurrenceSpec parse_recurrence_json(const std::string& text);
OdeSpec load_ode(const std::string& path);
RecurrenceSpec load_recurrence(const std::string& path);

struct HolonomicCheck {
  bool ok = true;
  int checked_through = -1;        // last order (ODE) or n (recurrence) checked
  std::optional<int> first_failure;
  BigInt residual;                 // value at the first failure
};

/// Residual [t^m] L(sum c_n t^n) for m = 0 .. N - max(order, max deg p_j),
/// the orders unaffected by truncating the series at t^N.
HolonomicCheck check_ode(const OdeSpec& ode, const std::vector<BigInt>& series);
/// Coefficients of the residual series through the checked order.
std::vector<BigInt> ode_residual(const OdeSpec& ode, const std::vector<BigInt>& series);

/// sum_j q_j(n) c_{n+j} for n = 0 .. N - span; throws if N < span.
HolonomicCheck check_recurrence(const RecurrenceSpec& rec, const std::vector<BigInt>& seq);

}  // namespace walks
