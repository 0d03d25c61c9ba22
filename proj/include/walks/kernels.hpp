// Data-parallel inner loops. Each kernel has a serial reference version
// (push formulation) and an OpenMP version (pull formulation, race-free).
// Both produce bit-identical results because all arithmetic is exact.
#pragma once

#include "walks/exact.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace walks {

enum class Exec { serial, parallel };

/// Dense d-dimensional array of big integers with equal side length.
/// Cell (c_1..c_d) lives at sum c_k * side^(k-1).
struct BoxGrid {
  int dim = 1;
  int side = 1;
  std::vector<BigInt> cells;

  BoxGrid() = default;
  BoxGrid(int dimension, int side_length);

  std::size_t index(std::span<const int> coords) const;
  const BigInt& at(std::span<const int> coords) const { return cells[index(coords)]; }
  BigInt& at(std::span<const int> coords) { return cells[index(coords)]; }
};

struct StencilEntry {
  Exponents offset;
  long weight = 1;
};

/// dst[c + offset] = sum of weight * src[c] over stencil entries, for source
/// cells with every coordinate < src_extent and targets with every coordinate
/// in [0, dst_extent). Cells of dst inside the target box are overwritten;
/// cells outside it are left alone.
void stencil_step_serial(const BoxGrid& src, int src_extent, BoxGrid& dst, int dst_extent,
                         std::span<const StencilEntry> stencil);
void stencil_step_parallel(const BoxGrid& src, int src_extent, BoxGrid& dst, int dst_extent,
                           std::span<const StencilEntry> stencil);
void stencil_step(Exec exec, const BoxGrid& src, int src_extent, BoxGrid& dst, int dst_extent,
                  std::span<const StencilEntry> stencil);

/// All exponent vectors in d variables of total degree <= max_degree, ranked in
/// the canonical graded-lex order. Shared between series of the same shape.
class MonomialIndex {
 public:
  static std::shared_ptr<const MonomialIndex> get(int dim, int max_degree);

  MonomialIndex(int dim, int max_degree);

  int dim() const { return dim_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return exps_.size(); }
  const Exponents& exponents(std::size_t rank) const { return exps_[rank]; }
  int degree(std::size_t rank) const { return degree_[rank]; }
  std::uint64_t packed(std::size_t rank) const { return packed_[rank]; }
  /// Rank of a non-negative exponent vector of degree <= max_degree.
  std::size_t rank(std::span<const int> e) const;
  std::size_t rank_of_packed(std::uint64_t key) const { return lut_[key]; }
  std::uint64_t pack(std::span<const int> e) const;

 private:
  int dim_;
  int max_degree_;
  std::vector<Exponents> exps_;
  std::vector<int> degree_;
  std::vector<std::uint64_t> packed_;
  std::vector<std::uint32_t> lut_;
};

/// Truncated product of two dense coefficient arrays laid out by `index`.
/// `nz_a`/`nz_b` list the ranks of nonzero entries in ascending order.
void theta_multiply_serial(const MonomialIndex& index, std::span<const GaussianRational> a,
                           std::span<const std::size_t> nz_a, std::span<const GaussianRational> b,
                           std::span<const std::size_t> nz_b, std::span<GaussianRational> out);
void theta_multiply_parallel(const MonomialIndex& index, std::span<const GaussianRational> a,
                             std::span<const std::size_t> nz_a, std::span<const GaussianRational> b,
                             std::span<const std::size_t> nz_b, std::span<GaussianRational> out);

/// Global execution policy used by modules that do not take one explicitly.
/// Starts as parallel when OpenMP offers more than one thread.
Exec default_exec();
void set_default_exec(Exec exec);

}  // namespace walks
