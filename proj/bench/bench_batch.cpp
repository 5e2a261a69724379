#include <benchmark/benchmark.h>

#include <map>

#include "farey/batch.hpp"

namespace {

using farey::batch::Query;

const std::vector<Query>& corpus(long max_den) {
  static std::map<long, std::vector<Query>> cache;
  auto it = cache.find(max_den);
  if (it == cache.end()) it = cache.emplace(max_den, farey::batch::unit_interval_corpus(max_den)).first;
  return it->second;
}

void BM_DistancesSerial(benchmark::State& state) {
  const auto& qs = corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(farey::batch::distances_serial(qs));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * qs.size()));
}

void BM_DistancesParallel(benchmark::State& state) {
  const auto& qs = corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(farey::batch::distances_parallel(qs));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * qs.size()));
}

void BM_OracleSerial(benchmark::State& state) {
  const auto& qs = corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(farey::batch::oracle_serial(qs));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * qs.size()));
}

void BM_OracleParallel(benchmark::State& state) {
  const auto& qs = corpus(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(farey::batch::oracle_parallel(qs));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * qs.size()));
}

}  // namespace

BENCHMARK(BM_DistancesSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistancesParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
