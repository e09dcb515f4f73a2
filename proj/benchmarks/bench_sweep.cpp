#include <benchmark/benchmark.h>

#include "qres/verifier.hpp"

using namespace qres;

namespace {

// One prime band of the default sweep, all items.
void BM_SweepBand(benchmark::State& state) {
  SweepConfig cfg;
  cfg.min = static_cast<std::uint64_t>(state.range(0));
  cfg.max = cfg.min + 100;
  cfg.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg).records.size());
}
BENCHMARK(BM_SweepBand)->Args({200, 1})->Args({1900, 1})->Args({1900, 4})->Unit(benchmark::kMillisecond);

void BM_ConjecturesAtPrime(benchmark::State& state) {
  SweepConfig cfg;
  cfg.targets = {"conj7.1", "conj7.2", "conj7.3", "conj7.4", "conj7.5",
                 "conj7.6", "conj7.7", "conj7.8", "conj7.9", "conj7.10"};
  cfg.min = static_cast<std::uint64_t>(state.range(0));
  cfg.max = cfg.min + 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg).records.size());
}
BENCHMARK(BM_ConjecturesAtPrime)->Arg(1999)->Arg(12853)->Unit(benchmark::kMillisecond);

}  // namespace
