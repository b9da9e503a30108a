#include "betalag/jack.hpp"
#include "betalag/kernels.hpp"
#include "betalag/semigroup.hpp"

#include <benchmark/benchmark.h>

using namespace betalag;

static void BM_JackExpansion(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) {
    JackContext<double> ctx(3, 1.3, w);
    for (const Partition& lam : partitions_of(w, 3))
      benchmark::DoNotOptimize(ctx.jack(lam));
  }
}
BENCHMARK(BM_JackExpansion)->Arg(4)->Arg(6)->Arg(8);

static void BM_DixonAndersonDraw(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> x(n + 1);
  for (int i = 0; i <= n; ++i) x[i] = 0.5 * i + 0.1;
  RngStream rng(1, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_dixon_anderson(x, 1.3, rng));
}
BENCHMARK(BM_DixonAndersonDraw)->Arg(2)->Arg(4)->Arg(8);

static void BM_SdeStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GeneratorSpec spec{GeneratorKind::Laguerre, 1.0, 0.5, n};
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = 0.3 * (i + 1);
  RngStream rng(2, 0);
  for (auto _ : state) {
    sde_step(spec, x, 1e-3, rng);
    benchmark::DoNotOptimize(x.data());
  }
}
BENCHMARK(BM_SdeStep)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
