#include <benchmark/benchmark.h>

#include "bring/continuation.hpp"
#include "bring/lattice.hpp"
#include "bring/pipeline.hpp"

using namespace bring;

namespace {

const HomologyStage& homology() {
  static const HomologyStage h = run_homology();
  return h;
}

const PeriodData& periods() {
  static const PeriodData d = period_matrices(homology().alphas);
  return d;
}

void BM_FiberRoots(benchmark::State& state) {
  cplx x(0.3, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fiber_roots(x));
    x *= cplx(1.0, 1e-6);
  }
}
BENCHMARK(BM_FiberRoots);

void BM_ThetaEval(benchmark::State& state) {
  const Theta theta(periods().tau);
  Vec4c z;
  z << cplx(0.1, 0.05), cplx(-0.2, 0.01), cplx(0.3, -0.04), cplx(0.05, 0.02);
  for (auto _ : state) benchmark::DoNotOptimize(theta(z));
  state.counters["terms"] = static_cast<double>(theta.term_count());
}
BENCHMARK(BM_ThetaEval);

void BM_PeriodMatrices(benchmark::State& state) {
  QuadratureOptions opt;
  opt.order = static_cast<int>(state.range(0));
  const auto& alphas = homology().alphas;
  for (auto _ : state) benchmark::DoNotOptimize(period_matrices(alphas, opt));
}
BENCHMARK(BM_PeriodMatrices)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_AbelMapBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(AbelMap(periods()).state_count());
}
BENCHMARK(BM_AbelMapBuild)->Unit(benchmark::kMillisecond);

void BM_AbelMapPoint(benchmark::State& state) {
  const AbelMap abel(periods());
  const cplx x(0.5, 0.9);
  const cplx y = fiber_roots(x).front();
  for (auto _ : state) benchmark::DoNotOptimize(abel.to_point(x, y));
}
BENCHMARK(BM_AbelMapPoint)->Unit(benchmark::kMicrosecond);

void BM_Homology(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_homology().K);
}
BENCHMARK(BM_Homology)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
