#include <benchmark/benchmark.h>

#include "moduli_atlas/brill_noether.hpp"
#include "moduli_atlas/hn_strata.hpp"
#include "moduli_atlas/oracle.hpp"
#include "moduli_atlas/sweep.hpp"
#include "moduli_atlas/tf_components.hpp"

using namespace moduli_atlas;

static void BM_EnumerateHnTypes(benchmark::State& state) {
  const Surface s(4);
  const Int n = state.range(0);
  const MukaiVector v = vector_from_chern_data(s, 2, n, 40);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_hn_types(s, v, n + 4));
}
BENCHMARK(BM_EnumerateHnTypes)->Arg(2)->Arg(8)->Arg(16);

static void BM_OracleEnumerate(benchmark::State& state) {
  const Surface s(4);
  const Int n = state.range(0);
  const MukaiVector v = vector_from_chern_data(s, 2, n, 40);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_enumerate(s, v, n + 4));
}
BENCHMARK(BM_OracleEnumerate)->Arg(2)->Arg(8)->Arg(16);

static void BM_ClassifyTf(benchmark::State& state) {
  const Surface s(2);
  const MukaiVector v{2, 3, -20};
  for (auto _ : state) benchmark::DoNotOptimize(classify_tf_components(s, v, 10));
}
BENCHMARK(BM_ClassifyTf);

static void BM_ClassifyBn(benchmark::State& state) {
  const BnInput inp(Surface(2), state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(classify_bn(inp));
}
BENCHMARK(BM_ClassifyBn)->Args({3, 6})->Args({8, 40});

static void BM_SweepDefaultGrid(benchmark::State& state) {
  const auto grid = oracle::GridSpec::default_grid();
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sweep(grid, 1));
}
BENCHMARK(BM_SweepDefaultGrid)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
