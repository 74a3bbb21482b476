#include <benchmark/benchmark.h>

#include <azkit/checks.hpp>

using azkit::CheckId;
using azkit::EvalPath;

namespace {

void run_one(benchmark::State& state, CheckId id, EvalPath path) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = azkit::run_check(id, p, path);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

static void BM_CheckA4_Fast(benchmark::State& state) {
  run_one(state, CheckId::A4, EvalPath::Fast);
}
BENCHMARK(BM_CheckA4_Fast)->Arg(97)->Arg(499)->Arg(1999);

static void BM_CheckA4_Exact(benchmark::State& state) {
  run_one(state, CheckId::A4, EvalPath::Exact);
}
BENCHMARK(BM_CheckA4_Exact)->Arg(97)->Arg(499);

static void BM_CheckA2_Fast(benchmark::State& state) {
  run_one(state, CheckId::A2, EvalPath::Fast);
}
BENCHMARK(BM_CheckA2_Fast)->Arg(97)->Arg(499)->Arg(1999);

static void BM_CheckA2_Exact(benchmark::State& state) {
  run_one(state, CheckId::A2, EvalPath::Exact);
}
BENCHMARK(BM_CheckA2_Exact)->Arg(97)->Arg(499);

static void BM_CheckB5_Fast(benchmark::State& state) {
  run_one(state, CheckId::B5, EvalPath::Fast);
}
BENCHMARK(BM_CheckB5_Fast)->Arg(499)->Arg(1999);

static void BM_CheckNEW1_Fast(benchmark::State& state) {
  run_one(state, CheckId::NEW1, EvalPath::Fast);
}
BENCHMARK(BM_CheckNEW1_Fast)->Arg(499)->Arg(1999);

// Whole-range sweeps, the headline workloads.
static void BM_SweepModP3(benchmark::State& state) {
  std::vector<CheckId> ids(azkit::kModP3Checks.begin(),
                           azkit::kModP3Checks.end());
  const unsigned workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto rep = azkit::sweep(5, 500, ids, workers);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_SweepModP3)->Arg(1)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SweepModP(benchmark::State& state) {
  std::vector<CheckId> ids(azkit::kModPChecks.begin(),
                           azkit::kModPChecks.end());
  const unsigned workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto rep = azkit::sweep(5, 2000, ids, workers);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_SweepModP)->Arg(1)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
