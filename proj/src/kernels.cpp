#include "walks/kernels.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace walks {

namespace {

Exec initial_exec() {
#ifdef _OPENMP
  return omp_get_max_threads() > 1 ? Exec::parallel : Exec::serial;
#else
  return Exec::serial;
#endif
}

std::atomic<Exec> g_default_exec{initial_exec()};

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void decode(std::size_t flat, int extent, std::span<int> coords) {
  for (auto& c : coords) {
    c = static_cast<int>(flat % static_cast<std::size_t>(extent));
    flat /= static_cast<std::size_t>(extent);
  }
}

void check_extents(const BoxGrid& src, int src_extent, const BoxGrid& dst, int dst_extent,
                   std::span<const StencilEntry> stencil) {
  if (src.dim != dst.dim) throw DimensionError("stencil grids differ in dimension");
  if (src_extent > src.side || dst_extent > dst.side || src_extent < 0 || dst_extent < 0)
    throw std::out_of_range("stencil extent exceeds grid side");
  for (const auto& s : stencil)
    if (static_cast<int>(s.offset.size()) != src.dim) throw DimensionError("stencil offset has wrong length");
}

}  // namespace

BoxGrid::BoxGrid(int dimension, int side_length)
    : dim(dimension), side(side_length), cells(ipow(static_cast<std::size_t>(side_length), dimension)) {}

std::size_t BoxGrid::index(std::span<const int> coords) const {
  std::size_t idx = 0;
  for (int k = dim - 1; k >= 0; --k) idx = idx * static_cast<std::size_t>(side) + static_cast<std::size_t>(coords[k]);
  return idx;
}

void stencil_step_serial(const BoxGrid& src, int src_extent, BoxGrid& dst, int dst_extent,
                         std::span<const StencilEntry> stencil) {
  check_extents(src, src_extent, dst, dst_extent, stencil);
  const int d = src.dim;
  std::vector<int> c(d), t(d);

  const std::size_t n_dst = ipow(static_cast<std::size_t>(dst_extent), d);
  for (std::size_t flat = 0; flat < n_dst; ++flat) {
    decode(flat, dst_extent, t);
    dst.at(t) = 0;
  }

  const std::size_t n_src = ipow(static_cast<std::size_t>(src_extent), d);
  for (std::size_t flat = 0; flat < n_src; ++flat) {
    decode(flat, src_extent, c);
    const BigInt& v = src.at(c);
    if (sgn(v) == 0) continue;
    for (const auto& s : stencil) {
      bool inside = true;
      for (int k = 0; k < d; ++k) {
        t[k] = c[k] + s.offset[k];
        if (t[k] < 0 || t[k] >= dst_extent) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      if (s.weight == 1)
        dst.at(t) += v;
      else
        dst.at(t) += s.weight * v;
    }
  }
}

void stencil_step_parallel(const BoxGrid& src, int src_extent, BoxGrid& dst, int dst_extent,
                           std::span<const StencilEntry> stencil) {
  check_extents(src, src_extent, dst, dst_extent, stencil);
  const int d = src.dim;
  const auto n_dst = static_cast<long long>(ipow(static_cast<std::size_t>(dst_extent), d));

#pragma omp parallel
  {
    std::vector<int> c(d), t(d);
    BigInt acc;
#pragma omp for schedule(static)
    for (long long flat = 0; flat < n_dst; ++flat) {
      decode(static_cast<std::size_t>(flat), dst_extent, t);
      acc = 0;
      for (const auto& s : stencil) {
        bool inside = true;
        for (int k = 0; k < d; ++k) {
          c[k] = t[k] - s.offset[k];
          if (c[k] < 0 || c[k] >= src_extent) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        const BigInt& v = src.at(c);
        if (s.weight == 1)
          acc += v;
        else
          acc += s.weight * v;
      }
      dst.at(t) = acc;
    }
  }
}

void stencil_step(Exec exec, const BoxGrid& src, int src_extent, BoxGrid& dst, int dst_extent,
                  std::span<const StencilEntry> stencil) {
  if (exec == Exec::serial)
    stencil_step_serial(src, src_extent, dst, dst_extent, stencil);
  else
    stencil_step_parallel(src, src_extent, dst, dst_extent, stencil);
}

std::shared_ptr<const MonomialIndex> MonomialIndex::get(int dim, int max_degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{dim, max_degree}];
  if (!slot) slot = std::make_shared<const MonomialIndex>(dim, max_degree);
  return slot;
}

MonomialIndex::MonomialIndex(int dim, int max_degree) : dim_(dim), max_degree_(max_degree) {
  if (dim <= 0 || max_degree < 0) throw DimensionError("bad monomial index shape");
  const std::size_t lut_size = ipow(static_cast<std::size_t>(max_degree) + 1, dim);
  if (lut_size > (std::size_t{1} << 26))
    throw std::length_error("theta series shape too large (dimension " + std::to_string(dim) + ", degree " +
                            std::to_string(max_degree) + ")");
  lut_.assign(lut_size, UINT32_MAX);

  // Within each degree, descending lex order: enumerate compositions with the
  // first coordinate as large as possible first.
  Exponents e(dim);
  for (int deg = 0; deg <= max_degree; ++deg) {
    std::fill(e.begin(), e.end(), 0);
    e[0] = deg;
    while (true) {
      exps_.push_back(e);
      degree_.push_back(deg);
      packed_.push_back(pack(e));
      lut_[packed_.back()] = static_cast<std::uint32_t>(exps_.size() - 1);
      // Next composition in descending lex order.
      int j = dim - 2;
      while (j >= 0 && e[j] == 0) --j;
      if (j < 0) break;
      int tail = e[dim - 1];
      e[dim - 1] = 0;
      --e[j];
      e[j + 1] = tail + 1;
    }
  }
}

std::uint64_t MonomialIndex::pack(std::span<const int> e) const {
  std::uint64_t key = 0;
  const auto base = static_cast<std::uint64_t>(max_degree_) + 1;
  for (int k = dim_ - 1; k >= 0; --k) key = key * base + static_cast<std::uint64_t>(e[k]);
  return key;
}

std::size_t MonomialIndex::rank(std::span<const int> e) const {
  if (static_cast<int>(e.size()) != dim_) throw DimensionError("exponent vector has wrong length");
  int deg = 0;
  for (int v : e) {
    if (v < 0) throw std::out_of_range("negative exponent in a theta series");
    deg += v;
  }
  if (deg > max_degree_) throw std::out_of_range("monomial exceeds truncation degree");
  return lut_[pack(e)];
}

void theta_multiply_serial(const MonomialIndex& index, std::span<const GaussianRational> a,
                           std::span<const std::size_t> nz_a, std::span<const GaussianRational> b,
                           std::span<const std::size_t> nz_b, std::span<GaussianRational> out) {
  const int max_deg = index.max_degree();
  for (auto& v : out) v = GaussianRational();
  for (std::size_t ia : nz_a) {
    const int room = max_deg - index.degree(ia);
    for (std::size_t ib : nz_b) {
      if (index.degree(ib) > room) break;
      out[index.rank_of_packed(index.packed(ia) + index.packed(ib))].add_product(a[ia], b[ib]);
    }
  }
}

void theta_multiply_parallel(const MonomialIndex& index, std::span<const GaussianRational> a,
                             std::span<const std::size_t> nz_a, std::span<const GaussianRational> b,
                             std::span<const std::size_t> nz_b, std::span<GaussianRational> out) {
  const int d = index.dim();
  const auto m = static_cast<long long>(index.size());
  const int min_deg_b = nz_b.empty() ? 0 : index.degree(nz_b.front());
  std::vector<char> b_nonzero(index.size(), 0);
  for (std::size_t ib : nz_b) b_nonzero[ib] = 1;

#pragma omp parallel for schedule(dynamic, 16)
  for (long long r = 0; r < m; ++r) {
    GaussianRational acc;
    const auto rr = static_cast<std::size_t>(r);
    const Exponents& er = index.exponents(rr);
    const int room = index.degree(rr) - min_deg_b;
    for (std::size_t ia : nz_a) {
      if (index.degree(ia) > room) break;
      const Exponents& ea = index.exponents(ia);
      bool fits = true;
      for (int k = 0; k < d; ++k)
        if (ea[k] > er[k]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      const std::size_t ib = index.rank_of_packed(index.packed(rr) - index.packed(ia));
      if (b_nonzero[ib]) acc.add_product(a[ia], b[ib]);
    }
    out[rr] = std::move(acc);
  }
}

Exec default_exec() { return g_default_exec.load(); }
void set_default_exec(Exec exec) { g_default_exec.store(exec); }

}  // namespace walks
