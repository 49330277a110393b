// Serial reference DFS against the OpenMP split search, plus one harness
// kernel at 1 thread and at the machine default.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "rainbow/harness.hpp"
#include "rainbow/search.hpp"

namespace {

rainbow::search::SearchConfig bench_config(int n, int threads) {
  rainbow::search::SearchConfig config;
  config.n = n;
  config.k = 4;
  config.symmetry = rainbow::search::SymmetryLevel::ValueOrder;
  config.threads = threads;
  return config;
}

void BM_SearchSerial(benchmark::State& state) {
  const auto config = bench_config(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto outcome = rainbow::search::search_rainbow_free_serial(config, 4);
    benchmark::DoNotOptimize(outcome.stats.nodes);
    state.counters["nodes"] = static_cast<double>(outcome.stats.nodes);
  }
}
BENCHMARK(BM_SearchSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
  const int threads = std::max(2, omp_get_max_threads());
  const auto config = bench_config(static_cast<int>(state.range(0)), threads);
  for (auto _ : state) {
    auto outcome = rainbow::search::search_rainbow_free(config, 4);
    benchmark::DoNotOptimize(outcome.stats.nodes);
    state.counters["nodes"] = static_cast<double>(outcome.stats.nodes);
  }
  state.counters["threads"] = threads;
}
BENCHMARK(BM_SearchParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Thm11Suite(benchmark::State& state) {
  rainbow::harness::RunOptions options;
  options.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = rainbow::harness::run_suite("thm1.1", {{"max_n", 1024}}, options);
    benchmark::DoNotOptimize(report.cases);
  }
}
BENCHMARK(BM_Thm11Suite)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
