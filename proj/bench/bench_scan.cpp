#include <benchmark/benchmark.h>

#include "statgeo/analysis.hpp"

namespace {

statgeo::ScanGrid gas_grid(int n) {
  return {{{"beta", 0.5, 2.0, n}, {"gamma", 0.1, 3.0, n}}};
}

void BM_ScanSerial(benchmark::State& state) {
  const auto model = statgeo::bose_ideal_gas();
  const auto grid = gas_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(statgeo::scan_serial(*model, grid, statgeo::kDefaultAlphas));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto model = statgeo::bose_ideal_gas();
  const auto grid = gas_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(statgeo::scan(*model, grid, statgeo::kDefaultAlphas));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

void BM_ScanSyntheticSerial(benchmark::State& state) {
  const auto model = statgeo::synthetic_potential(statgeo::cubic3d_spec());
  const int n = static_cast<int>(state.range(0));
  const statgeo::ScanGrid grid{{{"x1", -0.3, 0.3, n}, {"x2", -0.3, 0.3, n}, {"x3", -0.3, 0.3, n}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(statgeo::scan_serial(*model, grid, statgeo::kDefaultAlphas));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

void BM_ScanSyntheticParallel(benchmark::State& state) {
  const auto model = statgeo::synthetic_potential(statgeo::cubic3d_spec());
  const int n = static_cast<int>(state.range(0));
  const statgeo::ScanGrid grid{{{"x1", -0.3, 0.3, n}, {"x2", -0.3, 0.3, n}, {"x3", -0.3, 0.3, n}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(statgeo::scan(*model, grid, statgeo::kDefaultAlphas));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanSyntheticSerial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSyntheticParallel)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
