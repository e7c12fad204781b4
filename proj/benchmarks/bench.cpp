#include <benchmark/benchmark.h>

#include "dwell/dwell.hpp"

namespace {

using namespace dwell;

void BM_BuildHamiltonian(benchmark::State& state) {
  PotentialSpec spec{1.0, 5.0, 2, 1, false};
  SolverConfig cfg;
  cfg.basis_size = static_cast<int>(state.range(0));
  double gamma = solve_gamma(spec, cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_hamiltonian(spec, gamma, cfg));
}
BENCHMARK(BM_BuildHamiltonian)->Arg(100)->Arg(150)->Arg(250);

void BM_Diagonalize(benchmark::State& state) {
  PotentialSpec spec{1.0, 5.0, 2, 1, false};
  SolverConfig cfg;
  cfg.basis_size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(spec, cfg));
}
BENCHMARK(BM_Diagonalize)->Arg(100)->Arg(150)->Arg(250);

void BM_MeasureSet(benchmark::State& state) {
  PotentialSpec spec{1.0, 5.0, 2, 1, false};
  SolverConfig cfg;
  cfg.basis_size = 150;
  Spectrum s = diagonalize(spec, cfg);
  StateFunctions f = state_functions(s, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(measure_set(f));
}
BENCHMARK(BM_MeasureSet)->Arg(0)->Arg(3);

void BM_PhaseArea(benchmark::State& state) {
  PotentialSpec spec{1.0, 5.0, 2, 1, false};
  SolverConfig cfg;
  cfg.basis_size = 150;
  Spectrum s = diagonalize(spec, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(phase_area(spec, s, 0));
}
BENCHMARK(BM_PhaseArea);

void BM_ChoSolve(benchmark::State& state) {
  BoxConfig cfg;
  cfg.x_c = 1.0;
  cfg.basis_size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cho_solve(cfg));
}
BENCHMARK(BM_ChoSolve)->Arg(100)->Arg(250);

}  // namespace

BENCHMARK_MAIN();
