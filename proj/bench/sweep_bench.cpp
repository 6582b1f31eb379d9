// Serial reference vs OpenMP sweeps. Arg 0 runs serially; any other arg is
// the worker count.

#include <benchmark/benchmark.h>

#include "transit/enumeration.hpp"

using namespace transit;

namespace {

ExecutionPolicy policy_for(const benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  return workers == 0 ? ExecutionPolicy::serial() : ExecutionPolicy::with_workers(workers);
}

void BM_CountTSystems(benchmark::State& state) {
  const EnumerationSpec spec{static_cast<std::size_t>(state.range(1)), {SystemPredicate::kTSystem}, false};
  const auto policy = policy_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(count_systems(spec, policy));
}

void BM_WalkTSystems(benchmark::State& state) {
  const auto policy = policy_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(t_system_indices(5, policy));
}

void BM_Battery(benchmark::State& state) {
  const auto claims = implication_battery();
  const auto policy = policy_for(state);
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_implications(claims, n, policy));
}

void BM_Census(benchmark::State& state) {
  const auto policy = policy_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(census(4, policy));
}

}  // namespace

BENCHMARK(BM_CountTSystems)->ArgsProduct({{0, 2, 4}, {4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WalkTSystems)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Battery)->ArgsProduct({{0, 2, 4}, {4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
