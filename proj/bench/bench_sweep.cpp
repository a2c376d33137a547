// Serial reference loops versus the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "bpsis/experiments.hpp"
#include "bpsis/scan.hpp"

namespace {

void BM_CpMusAnalytic(benchmark::State& state) {
  const auto exec = state.range(0) ? bpsis::Execution::Parallel : bpsis::Execution::Serial;
  bpsis::ExperimentBase base;
  const auto cps = bpsis::default_cp_grid();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bpsis::sweep_cp_mus(base, cps, {0.7, 0.8, 0.9, 1.0}, bpsis::SweepMode::Analytic, exec));
}
BENCHMARK(BM_CpMusAnalytic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CpMusSimulate(benchmark::State& state) {
  const auto exec = state.range(0) ? bpsis::Execution::Parallel : bpsis::Execution::Serial;
  bpsis::ExperimentBase base;
  const auto cps = bpsis::linear_grid(1.0, 21.5, 16);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        bpsis::sweep_cp_mus(base, cps, {0.8}, bpsis::SweepMode::Simulate, exec));
}
BENCHMARK(BM_CpMusSimulate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Scan(benchmark::State& state) {
  const auto p = bpsis::ModelParams::baseline(21.0);
  const bpsis::SignalScheme s;
  for (auto _ : state) {
    if (state.range(0))
      benchmark::DoNotOptimize(bpsis::scan_sne_candidates(p, s));
    else
      benchmark::DoNotOptimize(bpsis::scan_sne_candidates_serial(p, s));
  }
}
BENCHMARK(BM_Scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
