#include <benchmark/benchmark.h>

#include "bosegas/backends.hpp"
#include "bosegas/combinatorics.hpp"
#include "bosegas/thermo.hpp"

namespace {

// Evaluations sit at rho Lambda^3 = 2.5, near the critical region.
bosegas::Q1Value near_critical(int n) { return bosegas::Q1Value(n / 2.5); }

void BM_CycleTypeEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    bosegas::for_each_cycle_type(n, [&](std::span<const bosegas::Part>, int) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CycleTypeEnumeration)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_MatsubaraEvaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bosegas::MatsubaraTable table(n);
  for (auto _ : state) benchmark::DoNotOptimize(table.evaluate(near_critical(n)));
}
BENCHMARK(BM_MatsubaraEvaluate)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_Landsberg(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bosegas::PowerTables tables(n, false);
  for (auto _ : state) benchmark::DoNotOptimize(bosegas::landsberg(n, near_critical(n), tables));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Landsberg)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

void BM_ParkKim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bosegas::PowerTables tables(n, true);
  for (auto _ : state) benchmark::DoNotOptimize(bosegas::park_kim(n, near_critical(n), tables));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ParkKim)
    ->RangeMultiplier(4)
    ->Range(256, 16384)
    ->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

void BM_PairWeights(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bosegas::PowerTables(n, true));
}
BENCHMARK(BM_PairWeights)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_CriticalPoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bosegas::critical_point(n));
}
BENCHMARK(BM_CriticalPoint)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
