#include <benchmark/benchmark.h>

#include "locus/sampling.hpp"

namespace {

const locus::Triangle& triangle() {
  static const auto t = locus::Triangle::make({0, 0}, {0, 3}, {4, 0});
  return t;
}

void BM_QuadraticSerial(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(locus::sample_quadratic_field_serial(triangle(), res));
}

void BM_QuadraticParallel(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(locus::sample_quadratic_field(triangle(), res));
}

void BM_LinearSerial(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(locus::sample_linear_field_serial(triangle(), res));
}

void BM_LinearParallel(benchmark::State& state) {
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(locus::sample_linear_field(triangle(), res));
}

}  // namespace

BENCHMARK(BM_QuadraticSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuadraticParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
