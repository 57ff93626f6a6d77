#include <benchmark/benchmark.h>

#include "ggp/classes.hpp"
#include "ggp/decomposition.hpp"
#include "ggp/multiplicity.hpp"
#include "ggp/qseries.hpp"
#include "ggp/theta.hpp"

static void BM_PartitionsOf(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ggp::partitions_of(n));
}
BENCHMARK(BM_PartitionsOf)->Arg(12)->Arg(20)->Arg(30);

static void BM_ThetaSet(benchmark::State& state) {
  const ggp::Partition lambda{4, 3, 2, 1};
  const auto target = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ggp::theta_set(lambda, target));
}
BENCHMARK(BM_ThetaSet)->Arg(6)->Arg(12)->Arg(18);

static void BM_DualitySweep(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    bool ok = true;
    for (const auto& lambda : ggp::partitions_of(n))
      for (unsigned m = 0; m <= n; ++m) ok = ok && ggp::duality_diagram_check(lambda, m);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_DualitySweep)->Arg(8)->Arg(10);

static void BM_UnipotentDegree(benchmark::State& state) {
  const ggp::Partition lambda{5, 4, 3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(ggp::unipotent_degree(lambda, state.range(0)));
}
BENCHMARK(BM_UnipotentDegree)->Arg(3)->Arg(101)->Arg(65537);

static void BM_ClassTypes(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ggp::enumerate_class_types(k, 5, true));
}
BENCHMARK(BM_ClassTypes)->Arg(4)->Arg(8);

static void BM_WeilDecomposition(benchmark::State& state) {
  const ggp::Partition lambda{3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(ggp::weil_decomposition(lambda, state.range(0)));
}
BENCHMARK(BM_WeilDecomposition)->Arg(3)->Arg(5)->Arg(7);

static void BM_OrbitCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ggp::brute_force_orbit_census(3, 3));
}
BENCHMARK(BM_OrbitCensus);
BENCHMARK_MAIN();
