#include <benchmark/benchmark.h>

#include "cglab/explorer.hpp"

namespace {

cglab::SearchConstraints grid(int max_weight) {
  cglab::SearchConstraints c;
  c.max_weight = max_weight;
  c.max_mult = 3;
  return c;
}

void BM_SearchSerial(benchmark::State& state) {
  const auto c = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cglab::search_serial(c));
}

void BM_SearchParallel(benchmark::State& state) {
  const auto c = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cglab::search(c, static_cast<int>(state.range(1))));
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->ArgsProduct({{6, 8}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
