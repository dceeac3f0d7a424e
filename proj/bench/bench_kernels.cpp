// OpenMP kernels against their serial references.

#include "sl3/kernels.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_StabilizerSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl3::stabilizer_sweep(10, 40, 0));
}
void BM_StabilizerSweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl3::stabilizer_sweep_serial(10, 40, 0));
}

void BM_LinkSweep(benchmark::State& state) {
  const sl3::MorseTable t(sl3::Window{21});
  for (auto _ : state) benchmark::DoNotOptimize(sl3::descending_link_sweep(t, 19));
}
void BM_LinkSweepSerial(benchmark::State& state) {
  const sl3::MorseTable t(sl3::Window{21});
  for (auto _ : state) benchmark::DoNotOptimize(sl3::descending_link_sweep_serial(t, 19));
}

void BM_Pairing(benchmark::State& state) {
  const sl3::MorseTable t(sl3::Window{21});
  for (auto _ : state) benchmark::DoNotOptimize(sl3::pairing_matrix(8, t));
}
void BM_PairingSerial(benchmark::State& state) {
  const sl3::MorseTable t(sl3::Window{21});
  for (auto _ : state) benchmark::DoNotOptimize(sl3::pairing_matrix_serial(8, t));
}

}  // namespace

BENCHMARK(BM_StabilizerSweep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilizerSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinkSweep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinkSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pairing)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairingSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
