#include <benchmark/benchmark.h>

#include <azkit/sequences.hpp>

static void BM_AzG(benchmark::State& state) {
  const unsigned long n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    azkit::BigInt g = azkit::az_G(n);
    benchmark::DoNotOptimize(g);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AzG)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_EulerExact(benchmark::State& state) {
  const unsigned long n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    azkit::BigInt e = azkit::euler_exact(n);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_EulerExact)->Arg(64)->Arg(128)->Arg(256);

// The dominant per-prime cost in mod-p sweeps: E_{p-3} mod p.
static void BM_EulerModP(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto e = azkit::euler_mod_u64(static_cast<unsigned long>(p - 3), p);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_EulerModP)->Arg(499)->Arg(997)->Arg(1999)->Arg(4999);

static void BM_SumCentralH2(benchmark::State& state) {
  const unsigned long m = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    azkit::BigRat s = azkit::sum_central_H2(m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SumCentralH2)->Arg(64)->Arg(256)->Arg(1024);

static void BM_SumGOver16(benchmark::State& state) {
  const unsigned long m = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    azkit::BigRat s = azkit::sum_G_over_16(m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SumGOver16)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
