#include <benchmark/benchmark.h>

#include "hconvex/bounds.hpp"
#include "hconvex/convexity.hpp"
#include "hconvex/sweep.hpp"

using namespace hconvex;

static void BM_PowerMeanBound(benchmark::State& state) {
  const FunctionSpec fs = catalog_square_log();
  const Interval iv = Interval::make(1.0, 4.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_thm22(fs, iv, LambdaWeight::simpson(), 2.0));
  }
}
BENCHMARK(BM_PowerMeanBound);

static void BM_HolderSandwichBound(benchmark::State& state) {
  const FunctionSpec fs = catalog_square_log();
  const Interval iv = Interval::make(1.0, 4.0);
  const ExponentPair e = ExponentPair::holder(3.0, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(bound_thm23(fs, iv, LambdaWeight::simpson(), e));
}
BENCHMARK(BM_HolderSandwichBound);

static void BM_Identity(benchmark::State& state) {
  const FunctionSpec fs = catalog_power(1.5);
  const Interval iv = Interval::make(0.5, 6.0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(fs, iv, LambdaWeight::make(0.4)));
}
BENCHMARK(BM_Identity);

static void BM_Sweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.functions = {"linear", "square"};
  cfg.sampler = IntervalSampler{static_cast<std::size_t>(state.range(0))};
  cfg.lambdas = {0.0, 1.0 / 3.0, 0.5, 1.0};
  cfg.q_values = {1, 2, 3};
  cfg.theorems = {"thm22"};
  cfg.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg));
  state.SetItemsProcessed(state.iterations() * 24 * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
