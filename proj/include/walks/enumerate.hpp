// Brute-force oracle: layered dynamic programming over the orthant, one dense
// box of big integers per walk length.
#pragma once

#include "walks/kernels.hpp"
#include "walks/laurent_poly.hpp"
#include "walks/stepset.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace walks {

class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(double estimate, double budget, const std::string& what);
  double estimate() const { return estimate_; }
  double budget() const { return budget_; }

 private:
  double estimate_;
  double budget_;
};

struct DpOptions {
  std::uint64_t cell_budget = std::uint64_t{1} << 28;
  bool keep_layers = true;
  Exec exec = default_exec();
};

/// Lattice points per layer for a run to length N in dimension d.
double dp_cell_estimate(int dimension, int max_length);

class CountTable {
 public:
  const StepSet& stepset() const { return steps_; }
  int max_length() const { return max_length_; }
  bool has_layers() const { return !layers_.empty(); }

  const std::vector<BigInt>& totals() const { return totals_; }
  const std::vector<BigInt>& excursions() const { return excursions_; }
  /// Number of walks of length n ending at `point`; needs stored layers.
  BigInt count(int n, std::span<const int> point) const;
  /// Layer n as a polynomial with non-negative exponents; needs stored layers.
  LaurentPoly endpoint_series(int n) const;

 private:
  friend CountTable count_walks(const StepSet& s, int max_length, const DpOptions& options);
  explicit CountTable(StepSet s) : steps_(std::move(s)) {}
  const BoxGrid& layer(int n) const;

  StepSet steps_;
  int max_length_ = 0;
  std::vector<BigInt> totals_;
  std::vector<BigInt> excursions_;
  std::vector<BoxGrid> layers_;  // layer n has side n + 1
};

/// Counts walks of length 0..max_length that stay in N^d. Throws
/// ResourceLimitError when (N+1)^d cells exceed the budget.
CountTable count_walks(const StepSet& s, int max_length, const DpOptions& options = {});

std::vector<BigInt> totals(const CountTable& table);
std::vector<BigInt> excursions(const CountTable& table);
LaurentPoly endpoint_series(const CountTable& table, int n);

}  // namespace walks
