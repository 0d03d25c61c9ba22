// Serial vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare scaling.
#include "walks/asymptotics.hpp"
#include "walks/enumerate.hpp"
#include "walks/kernels.hpp"
#include "walks/stepset.hpp"
#include "walks/theta_series.hpp"

#include <benchmark/benchmark.h>

using namespace walks;

namespace {

const char* const cube12 =
    "1,0,1; 1,0,-1; -1,0,1; -1,0,-1; 0,1,1; 0,1,-1; 0,-1,1; 0,-1,-1; 1,1,0; 1,-1,0; -1,1,0; -1,-1,0";

Exec exec_arg(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_Stencil(benchmark::State& state) {
  const StepSet s = parse_stepset(cube12);
  std::vector<StencilEntry> stencil;
  for (const auto& step : s.steps()) stencil.push_back({step, 1});
  const int side = static_cast<int>(state.range(1));
  BoxGrid src(3, side);
  BigInt big = 1;
  big <<= 200;
  for (std::size_t i = 0; i < src.cells.size(); ++i) src.cells[i] = big + static_cast<unsigned long>(i);
  BoxGrid dst(3, side + 1);
  for (auto _ : state) {
    stencil_step(exec_arg(state), src, side, dst, side + 1, stencil);
    benchmark::DoNotOptimize(dst.cells.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(src.cells.size() * stencil.size()));
}
BENCHMARK(BM_Stencil)->ArgsProduct({{0, 1}, {24, 48}})->Unit(benchmark::kMillisecond);

void BM_ThetaMultiply(benchmark::State& state) {
  const StepSet s = parse_stepset("N,S,NE,SE,NW,SW");
  const int truncation = static_cast<int>(state.range(1));
  const ThetaSeries phase = phase_series(s, {1, 1}, truncation);
  for (auto _ : state) benchmark::DoNotOptimize(phase.multiply(phase, exec_arg(state)));
}
BENCHMARK(BM_ThetaMultiply)->ArgsProduct({{0, 1}, {16, 32}})->Unit(benchmark::kMillisecond);

void BM_CountWalks(benchmark::State& state) {
  const StepSet s = parse_stepset(cube12);
  DpOptions opt;
  opt.keep_layers = false;
  opt.exec = exec_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(count_walks(s, static_cast<int>(state.range(1)), opt));
}
BENCHMARK(BM_CountWalks)->ArgsProduct({{0, 1}, {40}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
