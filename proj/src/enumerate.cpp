#include "walks/enumerate.hpp"

#include <cmath>
#include <sstream>

namespace walks {

ResourceLimitError::ResourceLimitError(double estimate, double budget, const std::string& what)
    : std::runtime_error(what), estimate_(estimate), budget_(budget) {}

double dp_cell_estimate(int dimension, int max_length) {
  return std::pow(static_cast<double>(max_length) + 1.0, dimension);
}

namespace {

void decode(std::size_t flat, int extent, std::span<int> coords) {
  for (auto& c : coords) {
    c = static_cast<int>(flat % static_cast<std::size_t>(extent));
    flat /= static_cast<std::size_t>(extent);
  }
}

std::size_t box_size(int extent, int d) {
  std::size_t n = 1;
  for (int k = 0; k < d; ++k) n *= static_cast<std::size_t>(extent);
  return n;
}

}  // namespace

CountTable count_walks(const StepSet& s, int max_length, const DpOptions& options) {
  if (max_length < 0) throw std::invalid_argument("maximum length must be non-negative");
  const int d = s.dimension();
  const double per_layer = dp_cell_estimate(d, max_length);
  const auto budget = static_cast<double>(options.cell_budget);
  if (per_layer > budget) {
    std::ostringstream os;
    os << "refusing to count: " << per_layer << " cells per layer for d=" << d << ", N=" << max_length
       << " exceeds the budget of " << budget;
    throw ResourceLimitError(per_layer, budget, os.str());
  }
  if (options.keep_layers) {
    double stored = 0;
    for (int n = 0; n <= max_length; ++n) stored += dp_cell_estimate(d, n);
    if (stored > budget) {
      std::ostringstream os;
      os << "refusing to keep endpoint layers: " << stored << " stored cells exceed the budget of " << budget;
      throw ResourceLimitError(stored, budget, os.str());
    }
  }

  std::vector<StencilEntry> stencil;
  for (const auto& step : s.steps()) stencil.push_back({step, 1});

  CountTable table(s);
  table.max_length_ = max_length;
  const int side = max_length + 1;
  BoxGrid cur(d, side), next(d, side);
  const std::vector<int> origin(d, 0);
  cur.at(origin) = 1;

  std::vector<int> c(d);
  for (int n = 0;; ++n) {
    const int extent = n + 1;
    BigInt total = 0;
    const std::size_t cells = box_size(extent, d);
    for (std::size_t flat = 0; flat < cells; ++flat) {
      decode(flat, extent, c);
      total += cur.at(c);
    }
    table.totals_.push_back(total);
    table.excursions_.push_back(cur.at(origin));
    if (options.keep_layers) {
      BoxGrid layer(d, extent);
      for (std::size_t flat = 0; flat < cells; ++flat) {
        decode(flat, extent, c);
        layer.cells[flat] = cur.at(c);
      }
      table.layers_.push_back(std::move(layer));
    }
    if (n == max_length) break;
    stencil_step(options.exec, cur, extent, next, extent + 1, stencil);
    std::swap(cur, next);
  }
  return table;
}

const BoxGrid& CountTable::layer(int n) const {
  if (layers_.empty()) throw std::logic_error("count table was built without endpoint layers");
  if (n < 0 || n > max_length_) throw std::out_of_range("walk length outside the table");
  return layers_[static_cast<std::size_t>(n)];
}

BigInt CountTable::count(int n, std::span<const int> point) const {
  const BoxGrid& g = layer(n);
  if (static_cast<int>(point.size()) != g.dim) throw DimensionError("endpoint has wrong dimension");
  for (int v : point)
    if (v < 0 || v > n) return 0;
  return g.at(point);
}

LaurentPoly CountTable::endpoint_series(int n) const {
  const BoxGrid& g = layer(n);
  LaurentPoly p(g.dim);
  Exponents e(g.dim);
  for (std::size_t flat = 0; flat < g.cells.size(); ++flat) {
    if (sgn(g.cells[flat]) == 0) continue;
    decode(flat, g.side, e);
    p.add_term(e, Rational(g.cells[flat]));
  }
  return p;
}

std::vector<BigInt> totals(const CountTable& table) { return table.totals(); }
std::vector<BigInt> excursions(const CountTable& table) { return table.excursions(); }
LaurentPoly endpoint_series(const CountTable& table, int n) { return table.endpoint_series(n); }

}  // namespace walks
