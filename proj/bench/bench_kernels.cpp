#include <filesystem>

#include <benchmark/benchmark.h>

#include "laserspin/entanglement.hpp"
#include "laserspin/kernels.hpp"
#include "laserspin/scenario.hpp"

using namespace laserspin;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

void BM_ResidualProfile(benchmark::State& state) {
  const LaserParams laser{0.6, 0.3, 1.0};
  const auto kin = modulus_from_params(laser, 1.0);
  const auto grid = uniform_grid(100.0, 20000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(residual_profile(grid, laser, kin, Dynamics::newtonian, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(BM_ResidualProfile)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_HamiltonianTable(benchmark::State& state) {
  BoundStateParams b;
  b.set_delta(1.0);
  b.g_coupling = 0.1;
  const LaserParams laser{0.3, 0.2, 1.0};
  const SpinHamiltonianSource source(laser, modulus_from_params(laser, 1.0), b);
  const auto grid = uniform_grid(50.0, 20000);
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_table(grid, source, mode(state)));
  state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(BM_HamiltonianTable)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ConcurrenceProfile(benchmark::State& state) {
  BoundStateParams b;
  b.set_delta(3.0);
  b.g_coupling = 0.1;
  const LaserParams laser{0.3, 0.0, 1.0};
  const SpinHamiltonianSource source(laser, modulus_from_params(laser, 1.0), b);
  const auto states = evolve_von_neumann(werner_state(0.8), source, uniform_grid(60.0, 4000), 1e-10);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence_profile(states, mode(state)));
  state.SetItemsProcessed(state.iterations() * states.size());
}
BENCHMARK(BM_ConcurrenceProfile)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Sweep(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.laser = {0.1, 0.0, 1.0};
  cfg.bound.set_delta(2.0);
  cfg.bound.g_coupling = 0.05;
  cfg.initial_state = WernerInit{0.8};
  cfg.t_end = 2.0;
  cfg.samples = 65;
  const std::vector<double> etas{0.02, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35};
  const auto dir = std::filesystem::temp_directory_path() / "laserspin_bench_sweep";
  for (auto _ : state) run_sweep(cfg, "eta", etas, static_cast<int>(state.range(0)), dir);
  std::filesystem::remove_all(dir);
  state.SetItemsProcessed(state.iterations() * etas.size());
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->ArgName("jobs")->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
