// Serial vs OpenMP timings of the main kernels. Both paths return the same
// bits, so only the wall time differs.

#include <benchmark/benchmark.h>

#include "hyperslice/inequalities.hpp"
#include "hyperslice/oracle.hpp"

using namespace hyperslice;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_Measure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const Body body = make_cross_polytope(n, 1.0);
  const Density density = make_gaussian(n, 0.9);
  const PolarIntegrator integ(n, QuadratureSpec{64, 12, 2.0});
  for (auto _ : state) benchmark::DoNotOptimize(integ.measure(body, density, mode(state)));
  label(state);
}
BENCHMARK(BM_Measure)->ArgsProduct({{0, 1}, {2, 3, 4}})->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const Body body(n, LpBall{1.5, std::vector<double>(n, 1.0)});
  const Density density = make_gaussian(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(make_profile(body, density, QuadratureSpec{}, 128, mode(state)));
  label(state);
}
BENCHMARK(BM_Profile)->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);

void BM_MaxSection(benchmark::State& state) {
  const Body body = make_cube(3, 1.0);
  const Density density = make_constant(3);
  for (auto _ : state) benchmark::DoNotOptimize(max_section(body, density, QuadratureSpec{}, 256, mode(state)));
  label(state);
}
BENCHMARK(BM_MaxSection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const Body body = make_ball(4, 1.0);
  const Density density = make_gaussian(4, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(mc_measure(body, density, 1'000'000, 7, mode(state)));
  label(state);
}
BENCHMARK(BM_MonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
