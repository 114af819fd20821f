#include <random>

#include <benchmark/benchmark.h>

#include "topoindex/edge_stats.hpp"
#include "topoindex/generators.hpp"
#include "topoindex/indices.hpp"
#include "topoindex/io.hpp"
#include "topoindex/products.hpp"
#include "topoindex/random_graphs.hpp"

using namespace topoindex;

static Graph random_graph(std::size_t n, double p) {
  std::mt19937_64 rng(n);
  return random_connected_graph(n, p, rng);
}

static void BM_EdgeStatsMatrix(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(edge_stats(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EdgeStatsMatrix)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

static void BM_EdgeStatsStreaming(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(edge_stats(g, 0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EdgeStatsStreaming)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void BM_ComputeIndicesGrid(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto g = cartesian_product(path(side), path(side));
  for (auto _ : state) benchmark::DoNotOptimize(compute_indices(g));
}
BENCHMARK(BM_ComputeIndicesGrid)->Arg(8)->Arg(16)->Arg(32);

static void BM_Graph6RoundTrip(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(to_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(16)->Arg(256);
BENCHMARK_MAIN();
