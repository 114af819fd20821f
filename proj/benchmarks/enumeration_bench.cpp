#include <random>

#include <benchmark/benchmark.h>

#include "topoindex/canonical.hpp"
#include "topoindex/extremal.hpp"
#include "topoindex/random_graphs.hpp"

using namespace topoindex;

static void BM_EnumerateLabeled(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t count = 0;
  for (auto _ : state) count = enumerate_connected({.n = n}, [](const Graph& g) { benchmark::DoNotOptimize(g); });
  state.counters["graphs"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateLabeled)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_EnumerateDeduped(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    enumerate_connected({.n = n, .dedupe = true}, [](const Graph& g) { benchmark::DoNotOptimize(g); });
  }
}
BENCHMARK(BM_EnumerateDeduped)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_CanonicalRefined(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto g = random_connected_graph(static_cast<std::size_t>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalRefined)->DenseRange(6, 11);

static void BM_CanonicalBruteForce(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto g = random_connected_graph(static_cast<std::size_t>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form_bruteforce(g));
}
BENCHMARK(BM_CanonicalBruteForce)->DenseRange(5, 8);

static void BM_ExtremalDeduped(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extremal_search({.n = n, .dedupe = true}, Objective::PiW));
}
BENCHMARK(BM_ExtremalDeduped)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
