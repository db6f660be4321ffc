// Serial reference vs OpenMP campaign runner on a mid-sized workload.
#include <benchmark/benchmark.h>

#include "schatten/verify.hpp"

using namespace schatten;

namespace {

VerifyConfig workload() {
  VerifyConfig cfg;
  cfg.cases = {InequalityCase::Th1, InequalityCase::Cor1,
               InequalityCase::Th2, InequalityCase::Cor2};
  cfg.p_grid = {0.5, 1.0, 2.0, 4.0};
  cfg.n_list = {3};
  cfg.d_list = {6};
  cfg.trials = 20;
  cfg.seed = 1;
  return cfg;
}

void bm_verify_serial(benchmark::State& state) {
  VerifyConfig cfg = workload();
  for (auto _ : state) {
    auto reports = run_verify(cfg, false);
    benchmark::DoNotOptimize(reports);
  }
}

void bm_verify_parallel(benchmark::State& state) {
  VerifyConfig cfg = workload();
  for (auto _ : state) {
    auto reports = run_verify(cfg, true);
    benchmark::DoNotOptimize(reports);
  }
}

}  // namespace

BENCHMARK(bm_verify_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_verify_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
