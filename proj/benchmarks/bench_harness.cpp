#include <string>

#include <benchmark/benchmark.h>

#include "srk/schwarz_pick.hpp"

namespace {

void run_family(benchmark::State& state, const std::string& family) {
  srk::HarnessConfig cfg;
  cfg.family = family;
  cfg.count = static_cast<int>(state.range(0));
  cfg.seed = 31;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(srk::run_harness(cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.count);
}

void BM_HarnessMobius(benchmark::State& state) { run_family(state, "mobius"); }
BENCHMARK(BM_HarnessMobius)->Arg(4)->Arg(16);

void BM_HarnessBlaschke(benchmark::State& state) {
  run_family(state, "blaschke");
}
BENCHMARK(BM_HarnessBlaschke)->Arg(4)->Arg(16);

void BM_HarnessBounded(benchmark::State& state) {
  run_family(state, "bounded");
}
BENCHMARK(BM_HarnessBounded)->Arg(4)->Arg(16);

void BM_SampleSelfMap(benchmark::State& state) {
  const srk::SelfMapKind kind = static_cast<srk::SelfMapKind>(state.range(0));
  std::uint64_t seed = 41;
  for (auto _ : state) {
    benchmark::DoNotOptimize(srk::sample_self_map(kind, seed++));
  }
}
BENCHMARK(BM_SampleSelfMap)->Arg(0)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
