#include <benchmark/benchmark.h>

#include "binform/area.hpp"
#include "binform/discriminant.hpp"
#include "binform/extremal.hpp"
#include "binform/families.hpp"
#include "binform/plot.hpp"
#include "binform/roots.hpp"
#include "binform/thue.hpp"

using namespace binform;

static void BM_RootsPk(benchmark::State& state) {
  const auto p = make_pk(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(roots(p));
}
BENCHMARK(BM_RootsPk)->DenseRange(2, 7);

static void BM_AreaPk(benchmark::State& state) {
  const auto p = make_pk(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(area(p));
}
BENCHMARK(BM_AreaPk)->DenseRange(2, 7)->Unit(benchmark::kMicrosecond);

static void BM_InvariantFstar(benchmark::State& state) {
  const auto f = make_fstar(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariant(f));
}
BENCHMARK(BM_InvariantFstar)->DenseRange(3, 12, 3)->Unit(benchmark::kMicrosecond);

static void BM_DiscriminantExact(benchmark::State& state) {
  const auto p = make_pk(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_exact(p));
}
BENCHMARK(BM_DiscriminantExact)->DenseRange(2, 7)->Unit(benchmark::kMicrosecond);

static void BM_CountDefinite(benchmark::State& state) {
  const auto p = make_pk(2);
  for (auto _ : state) benchmark::DoNotOptimize(count_definite(p, state.range(0)));
}
BENCHMARK(BM_CountDefinite)->RangeMultiplier(8)->Range(1, 4096)->Unit(benchmark::kMicrosecond);

static void BM_CountBox(benchmark::State& state) {
  const auto f = BinaryForm::integer({1, 0, 0, -2});
  for (auto _ : state) benchmark::DoNotOptimize(count_box(f, 10, state.range(0)));
}
BENCHMARK(BM_CountBox)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

static void BM_LevelSetP7(benchmark::State& state) {
  const auto p = make_pk(7);
  const PlotSpec spec{1.0, 8.0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(level_set(p, spec));
}
BENCHMARK(BM_LevelSetP7)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

static void BM_EstimateMn(benchmark::State& state) {
  MnOptions opts;
  opts.restarts = 1;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_mn(static_cast<int>(state.range(0)), opts));
}
BENCHMARK(BM_EstimateMn)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
