// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "maschke/certify.hpp"
#include "maschke/kernels.hpp"

using namespace maschke;

namespace {

const std::vector<Line>& lines352() {
  static const std::vector<Line> lines = build_line_catalogue().all352;
  return lines;
}

const GroupClosure& ab_group() {
  static const GroupClosure g = closure(builtin_generators(BuiltinGroup::kAB));
  return g;
}

const FpSingularSystem& system23() {
  static const FpSingularSystem s = FpSingularSystem::from(build_maschke_f(), 23);
  return s;
}

void BM_DisjointSweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::disjoint_sweep(lines352()));
}

void BM_DisjointSweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parallel::disjoint_sweep(lines352(), state.range(0)));
}

void BM_MeetingPairsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::meeting_pairs(lines352()));
}

void BM_MeetingPairsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parallel::meeting_pairs(lines352(), state.range(0)));
}

void BM_SingularScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::singular_scan(system23()));
}

void BM_SingularScanParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parallel::singular_scan(system23(), state.range(0)));
}

void BM_MolienSumSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::molien_sum(ab_group().elements(), 8));
}

void BM_MolienSumParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parallel::molien_sum(ab_group().elements(), 8, state.range(0)));
}

}  // namespace

BENCHMARK(BM_DisjointSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DisjointSweepParallel)->RangeMultiplier(2)->Range(1, 8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeetingPairsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeetingPairsParallel)->RangeMultiplier(2)->Range(1, 8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingularScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingularScanParallel)->RangeMultiplier(2)->Range(1, 8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MolienSumSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MolienSumParallel)->RangeMultiplier(2)->Range(1, 8)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
