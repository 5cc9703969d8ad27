#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "icol/construct.h"
#include "icol/invariants.h"
#include "icol/oracle.h"

namespace icol {
namespace {

Graph RandomTree(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> edges;
  for (int x = 1; x < n; ++x) {
    edges.push_back({std::uniform_int_distribution<int>(0, x - 1)(rng), x});
  }
  return Graph(n, edges);
}

Graph Cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

void BM_MaxPathStarSize(benchmark::State& state) {
  Graph tree = RandomTree(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(MaxPathStarSize(tree));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxPathStarSize)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_ConstructGreedy(benchmark::State& state) {
  Graph tree = RandomTree(static_cast<int>(state.range(0)), 2);
  int t = std::min(MaxPathStarSize(tree).value, kMaxPalette);
  for (auto _ : state) benchmark::DoNotOptimize(ConstructGreedy(tree, t));
}
BENCHMARK(BM_ConstructGreedy)->RangeMultiplier(4)->Range(64, 4096);

void BM_ConstructBySearch(benchmark::State& state) {
  Graph tree = RandomTree(static_cast<int>(state.range(0)), 3);
  int t = MaxDegree(tree) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(ConstructBySearch(tree, t));
}
BENCHMARK(BM_ConstructBySearch)->Arg(16)->Arg(32)->Arg(64);

void BM_ExactSpectrumCycle(benchmark::State& state) {
  Graph cycle = Cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ExactSpectrum(cycle));
}
BENCHMARK(BM_ExactSpectrumCycle)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_TreeCatalog(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(TreeCatalog(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_TreeCatalog)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace icol

BENCHMARK_MAIN();
