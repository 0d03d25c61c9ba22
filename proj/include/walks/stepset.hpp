// Walk models: step sets in {-1,0,1}^d, their inventory S(z), and the
// per-axis decomposition S = (1/z_k + z_k) S1 + S0.
#pragma once

#include "walks/exact.hpp"
#include "walks/laurent_poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace walks {

/// Unvalidated step list as read from input.
struct RawStepSet {
  int dimension = 0;
  std::vector<Exponents> steps;
};

enum class ValidationFailure {
  DimensionMismatch,
  OutOfRangeEntry,
  ZeroStepPresent,
  DuplicateStep,
  NotSymmetric,
  NoForwardStep,
};

std::string to_string(ValidationFailure f);

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationFailure kind, int axis, std::optional<Exponents> witness, const std::string& msg)
      : std::invalid_argument(msg), kind_(kind), axis_(axis), witness_(std::move(witness)) {}

  ValidationFailure kind() const { return kind_; }
  /// One-based axis for NotSymmetric/NoForwardStep, zero otherwise.
  int axis() const { return axis_; }
  const std::optional<Exponents>& witness() const { return witness_; }

 private:
  ValidationFailure kind_;
  int axis_;
  std::optional<Exponents> witness_;
};

/// A validated highly symmetric step set. Steps keep their input order.
class StepSet {
 public:
  int dimension() const { return dim_; }
  const std::vector<Exponents>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  friend bool operator==(const StepSet& a, const StepSet& b) { return a.dim_ == b.dim_ && a.steps_ == b.steps_; }

 private:
  friend StepSet validate(const RawStepSet& raw);
  StepSet(int d, std::vector<Exponents> steps) : dim_(d), steps_(std::move(steps)) {}

  int dim_;
  std::vector<Exponents> steps_;
};

/// Accepts iff the set is symmetric about every axis and moves forward in
/// every coordinate; throws ValidationError naming the first failing axis.
StepSet validate(const RawStepSet& raw);

/// S(z) = sum over steps of z^step.
LaurentPoly inventory(const StepSet& s);

struct InventoryDecomposition {
  int axis = 0;  // zero-based
  LaurentPoly s1;  // steps with +1 in the axis, axis variable dropped
  LaurentPoly s0;  // steps with 0 in the axis
};

/// S1 and S0 live in the ambient d-variable ring with exponent 0 on `axis`.
InventoryDecomposition decompose(const StepSet& s, int axis);

/// s^(k): number of steps whose k-th coordinate is +1.
std::vector<long> forward_counts(const StepSet& s);

LaurentPoly apply_sign_map(const LaurentPoly& p, std::span<const int> sigma);

/// All 2^d vectors in {+1,-1}^d, starting from (1,...,1), in a fixed order.
std::vector<std::vector<int>> sign_vectors(int dimension);

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& msg)
      : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + msg),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Reads compass tokens (`N,S,E,W,NE,...`, d = 2, E/W on axis 1) or
/// semicolon-separated integer tuples (`1,0,-1; -1,0,-1`). No validation.
RawStepSet parse_raw_stepset(const std::string& text);
/// parse_raw_stepset followed by validate.
StepSet parse_stepset(const std::string& text);
/// Tuple-grammar text that parses back to the same step set.
std::string serialize(const StepSet& s);

}  // namespace walks
