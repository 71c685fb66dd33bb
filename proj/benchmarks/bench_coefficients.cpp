#include <benchmark/benchmark.h>

#include "hconvex/constants.hpp"

using namespace hconvex;

static void BM_C123(benchmark::State& state) {
  // range(0) selects the closed form (wide pair) or the series (close pair).
  const double v = state.range(0) ? 3.0 : 1.01;
  for (auto _ : state) benchmark::DoNotOptimize(coeff_c123(LambdaWeight::simpson(), 1.0, v));
}
BENCHMARK(BM_C123)->Arg(0)->Arg(1);

static void BM_C1Holder(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeff_c1_holder(LambdaWeight::simpson(), 3.0, 1.0, 3.0));
  }
}
BENCHMARK(BM_C1Holder);

static void BM_C456(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeff_c456(LambdaWeight::midpoint(), 3.0, 1.5, 1.0, 3.0));
  }
}
BENCHMARK(BM_C456);

static void BM_Intro(benchmark::State& state) {
  const Interval iv = Interval::make(1.0, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(coeff_intro(iv, 2.0));
}
BENCHMARK(BM_Intro);
