// Serial reference vs OpenMP budget kernel over growing frequency grids.
#include <benchmark/benchmark.h>

#include "msnoise/budget.hpp"
#include "msnoise/config.hpp"

namespace {

msnoise::FrequencyGrid grid_of(benchmark::State &state) {
  return {.f_min = 1e3, .f_max = 1e6, .n_points = static_cast<std::size_t>(state.range(0)),
          .spacing = msnoise::GridSpacing::log};
}

void BM_budget_serial(benchmark::State &state) {
  const auto cfg = msnoise::table1_preset();
  const auto grid = grid_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(msnoise::compute_budget_serial(grid, cfg, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_budget_openmp(benchmark::State &state) {
  const auto cfg = msnoise::table1_preset();
  const auto grid = grid_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(msnoise::compute_budget(grid, cfg, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_budget_serial)->RangeMultiplier(10)->Range(1000, 1000000)->UseRealTime();
BENCHMARK(BM_budget_openmp)->RangeMultiplier(10)->Range(1000, 1000000)->UseRealTime();

BENCHMARK_MAIN();
