#include <cmath>

#include <benchmark/benchmark.h>

#include "hconvex/numerics.hpp"

using namespace hconvex;

static void BM_IntegrateSmooth(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_adaptive([](double x) { return std::log(x) / (x * x); }, 0.5, 40.0, tol, tol));
  }
}
BENCHMARK(BM_IntegrateSmooth)->DenseRange(6, 12, 2);

static void BM_KinkedKernel(benchmark::State& state) {
  const Interval iv = Interval::make(1.0, 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_kernel_integral(KernelKind::pow_over_affine_2p, 0.37, 2.5, iv,
                                               Half::lower, TWeight::t));
  }
}
BENCHMARK(BM_KinkedKernel);
