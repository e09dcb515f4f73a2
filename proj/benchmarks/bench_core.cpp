#include <benchmark/benchmark.h>

#include "qres/closed_forms.hpp"
#include "qres/lucas.hpp"
#include "qres/modular.hpp"
#include "qres/products.hpp"
#include "qres/sieve.hpp"

using namespace qres;

namespace {

// Largest prime below the requested size.
OddPrime prime_near(std::int64_t n) {
  auto q = static_cast<std::uint64_t>(n);
  while (!is_prime(q)) --q;
  return OddPrime(q);
}

void BM_Jacobi(benchmark::State& state) {
  const Modulus n(1000000007ULL * 3);
  std::int64_t x = 123456789;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi(x, n));
    x += 7919;
  }
}
BENCHMARK(BM_Jacobi);

void BM_LegendreTable(benchmark::State& state) {
  const OddPrime p = prime_near(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(LegendreTable(p).raw().data());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LegendreTable)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

void BM_ProductT(benchmark::State& state) {
  const OddPrime p = prime_near(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_T({1, -1, -1}, p).value.value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductT)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_ClosedTGeneral(benchmark::State& state) {
  const OddPrime p = prime_near(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_T_general(3, p).value.value);
}
BENCHMARK(BM_ClosedTGeneral)->Arg(4096)->Arg(1 << 20);

void BM_SymbolProductQuadratic(benchmark::State& state) {
  const OddPrime p = prime_near(state.range(0));
  const LegendreTable t(p);
  for (auto _ : state) benchmark::DoNotOptimize(symbol_product_quadratic({1, 1, 1}, t, TriangleRange::strict_upper));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SymbolProductQuadratic)->RangeMultiplier(2)->Range(512, 8192)->Complexity(benchmark::oNSquared);

void BM_LucasPair(benchmark::State& state) {
  const OddPrime p(2147483647ULL);
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lucas_pair_mod(1, n, p).u.value);
    n = n * 6364136223846793005ULL + 1;
  }
}
BENCHMARK(BM_LucasPair);

void BM_Sieve(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(2, hi).size());
}
BENCHMARK(BM_Sieve)->Arg(1 << 16)->Arg(1 << 22);

}  // namespace
BENCHMARK_MAIN();
