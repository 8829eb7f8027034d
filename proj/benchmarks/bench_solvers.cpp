#include <benchmark/benchmark.h>

#include "los/decomp.hpp"
#include "los/generate.hpp"
#include "los/narrow_dp.hpp"
#include "los/semionline.hpp"
#include "los/windows.hpp"

namespace {

los::LosInstance instance(int n, int k, int omega, double density, std::uint64_t seed = 1) {
  los::GenConfig cfg;
  cfg.params = {2, {n, k}, omega};
  cfg.density = density;
  cfg.seed = seed;
  return los::generate(cfg);
}

void BM_ExactNarrow(benchmark::State& state) {
  const auto inst = instance(static_cast<int>(state.range(0)), 2, 3, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(los::solve_exact_narrow(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactNarrow)->RangeMultiplier(2)->Range(250, 4000)->Complexity(benchmark::oN);

void BM_ExactNarrowRows(benchmark::State& state) {
  const auto inst = instance(500, static_cast<int>(state.range(0)), 3, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(los::solve_exact_narrow(inst));
}
BENCHMARK(BM_ExactNarrowRows)->DenseRange(1, 5);

void BM_EnumerateWindows(benchmark::State& state) {
  const auto rows = los::RowSpace::box({static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(los::WindowSet::enumerate(los::WindowRules::line_of_sight(rows, 3)));
}
BENCHMARK(BM_EnumerateWindows)->DenseRange(1, 6);

void BM_Strip2(benchmark::State& state) {
  const auto inst = instance(400, 12, 3, 0.5);
  los::SolverOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(los::solve_strip2(inst, opts));
}
BENCHMARK(BM_Strip2)->Arg(1)->Arg(4)->UseRealTime();

void BM_Ptas(benchmark::State& state) {
  const auto inst = instance(200, 12, 3, 0.5);
  const los::Rational eps(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(los::solve_ptas(inst, eps));
}
BENCHMARK(BM_Ptas)->Arg(1)->Arg(2)->Arg(4);

void BM_SemiOnline(benchmark::State& state) {
  const auto inst = instance(2000, 2, 3, 0.5);
  const los::Rational eps(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(los::solve_semionline(inst, eps).solution);
}
BENCHMARK(BM_SemiOnline)->Arg(1)->Arg(2);

}  // namespace
BENCHMARK_MAIN();
