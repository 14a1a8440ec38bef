#include <benchmark/benchmark.h>

#include "cayley/annulus.hpp"
#include "cayley/ball_table.hpp"
#include "cayley/deadends.hpp"
#include "cayley/models.hpp"

using namespace cayley;

static void BM_EnumerateLine(benchmark::State& state) {
  auto model = make_group("line-lamplighter m=2");
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = enumerate_ball(model, N);
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_EnumerateLine)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTreeLamplighter(benchmark::State& state) {
  auto model = make_group("tree-lamplighter d=3 m=2");
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(model, N).size());
}
BENCHMARK(BM_EnumerateTreeLamplighter)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_AnnulusComponents(benchmark::State& state) {
  static const auto table = enumerate_ball(make_group("line-lamplighter m=2"), 14);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto a = build_annulus(n, 1, true, table);
    benchmark::DoNotOptimize(components(a, Restriction::SphereInfinite).blocks.size());
  }
}
BENCHMARK(BM_AnnulusComponents)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_Thickness(benchmark::State& state) {
  static const auto table = enumerate_ball(make_group("line-lamplighter m=2"), 14);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(connection_thickness(n, n + 4, table).thickness);
}
BENCHMARK(BM_Thickness)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_StraightTable(benchmark::State& state) {
  static const auto table = enumerate_ball(make_group("line-lamplighter m=2"), 14);
  for (auto _ : state) {
    DeadEndAnalyzer an(table);
    benchmark::DoNotOptimize(an.straight_table().valid_up_to());
  }
}
BENCHMARK(BM_StraightTable)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
