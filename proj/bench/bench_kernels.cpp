#include <benchmark/benchmark.h>

#include "dupcodes/kernels.hpp"

namespace k = dupcodes::kernels;

static void BM_SphereSizesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::serial::tally_deletion_sphere_sizes(state.range(0), 2, 2));
}
static void BM_SphereSizesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::tally_deletion_sphere_sizes(state.range(0), 2, 2));
}

static void BM_C1ResiduesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::serial::tally_c1_residues(state.range(0), 2, 2));
}
static void BM_C1ResiduesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::tally_c1_residues(state.range(0), 2, 2));
}

static void BM_C2ClassesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::serial::tally_c2_classes(state.range(0)));
}
static void BM_C2ClassesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::tally_c2_classes(state.range(0)));
}

static void BM_PalindromeFreeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::serial::count_palindrome_free(state.range(0), 3));
}
static void BM_PalindromeFreeParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::count_palindrome_free(state.range(0), 3));
}

static void BM_TransversalSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::serial::transversal_deficits(state.range(0), 1, 1, 2));
}
static void BM_TransversalParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::transversal_deficits(state.range(0), 1, 1, 2));
}

BENCHMARK(BM_SphereSizesSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SphereSizesParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_C1ResiduesSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_C1ResiduesParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_C2ClassesSerial)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_C2ClassesParallel)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PalindromeFreeSerial)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PalindromeFreeParallel)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransversalSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransversalParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
