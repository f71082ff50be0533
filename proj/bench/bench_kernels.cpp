// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "qnh/measures.hpp"
#include "qnh/oracle.hpp"
#include "qnh/sweep.hpp"

namespace {

qnh::SweepConfig bench_config() {
  qnh::SweepConfig cfg;
  cfg.family = qnh::MixedPsi{0.5};
  cfg.gamma_tilde_list = {0.25, 0.5, 1.0, 1.5};
  cfg.steps = 1001;
  cfg.mode = qnh::MeasureMode::Faithful;
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(qnh::run_sweep_serial(cfg));
  state.SetItemsProcessed(state.iterations() * 4 * cfg.steps);
}

void BM_SweepOpenMP(benchmark::State& state) {
  const auto cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(qnh::run_sweep(cfg));
  state.SetItemsProcessed(state.iterations() * 4 * cfg.steps);
}

qnh::DensityMatrix4 x_zero_state() {
  qnh::oracle::Rng rng(7);
  return qnh::oracle::random_x_zero_state(rng);
}

void BM_SphereSearchSerial(benchmark::State& state) {
  const auto rho = x_zero_state();
  qnh::SphereSearchOptions opts;
  opts.grid_points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qnh::min_bruteforce_serial(rho, qnh::NormKind::Trace, opts));
}

void BM_SphereSearchOpenMP(benchmark::State& state) {
  const auto rho = x_zero_state();
  qnh::SphereSearchOptions opts;
  opts.grid_points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qnh::min_bruteforce(rho, qnh::NormKind::Trace, opts));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepOpenMP)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SphereSearchSerial)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SphereSearchOpenMP)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
