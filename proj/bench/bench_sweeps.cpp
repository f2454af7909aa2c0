// Serial reference vs OpenMP path for the grid sweeps and the Monte-Carlo
// oracle. Run with --benchmark_counters_tabular=true for a compact table.

#include "cvtri/cavity.hpp"
#include "cvtri/oracle.hpp"
#include "cvtri/sweep.hpp"

#include <benchmark/benchmark.h>

namespace {

using cvtri::Execution;

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_SymmetricSweep(benchmark::State& state) {
  const auto grid = cvtri::linspace(0.0, 3.0, 2001);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvtri::symmetric_sweep(2.0 / 3.0, 0.5, grid, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_AsymSweep(benchmark::State& state) {
  const auto params = cvtri::AsymParams::with_ratio(0.6);
  const auto grid = cvtri::linspace(0.0, 4.0, 20001);
  for (auto _ : state) benchmark::DoNotOptimize(cvtri::asym_tw_sweep(params, grid, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_CavityOmegaSweep(benchmark::State& state) {
  const auto system = cvtri::build_system(cvtri::CavityParams{}.with_pump_fraction(0.8));
  const auto grid = cvtri::linspace(-6.0, 6.0, 20001);
  for (auto _ : state) benchmark::DoNotOptimize(cvtri::cavity_omega_sweep(system, grid, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_PumpSweep(benchmark::State& state) {
  const auto fracs = cvtri::linspace(0.1, 0.98, 45);
  const auto omegas = cvtri::default_omega_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cvtri::pump_sweep(cvtri::CavityParams{}, fracs, omegas, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(fracs.size() * omegas.size()));
}

void BM_McCovariance(benchmark::State& state) {
  const auto map = cvtri::tw_transform(cvtri::AsymParams::with_ratio(0.6), 1.0);
  constexpr std::size_t kSamples = 1'000'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) == 0 ? cvtri::oracle::mc_covariance_serial(map, kSamples, {7})
                                                 : cvtri::oracle::mc_covariance(map, kSamples, {7}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(kSamples));
}

}  // namespace

BENCHMARK(BM_SymmetricSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AsymSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CavityOmegaSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PumpSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McCovariance)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
