#include <benchmark/benchmark.h>

#include "reqc/reqc.hpp"

using namespace reqc;

static void BM_Propagator(benchmark::State& state) {
  Rng rng = stream_rng(1, 0);
  const Operator h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(propagator(h, 0.7));
}
BENCHMARK(BM_Propagator)->Arg(3)->Arg(9)->Arg(27)->Arg(81);

static void BM_CompositeCpsPropagator(benchmark::State& state) {
  const Instance pair = pair_instance({0.01, 1.05}, {-0.01, 0.95}, 100.0);
  const GateSpec gate = expand(symmetrized_cps(channel(0), channel(1)), PulsePolicy::bb1);
  for (auto _ : state) benchmark::DoNotOptimize(gate_propagator(pair, gate));
}
BENCHMARK(BM_CompositeCpsPropagator);

static void BM_CompositeCpsBlockRoute(benchmark::State& state) {
  const Instance pair = pair_instance({0.01, 1.05}, {-0.01, 0.95}, 100.0);
  const GateSpec gate = expand(symmetrized_cps(channel(0), channel(1)), PulsePolicy::bb1);
  const StateVector psi = basis_state(pair, {Level::g1, Level::g1});
  for (auto _ : state) benchmark::DoNotOptimize(apply_gate(pair, gate, psi));
}
BENCHMARK(BM_CompositeCpsBlockRoute);

static void BM_SubspaceFidelity(benchmark::State& state) {
  const Instance pair = pair_instance({0.02, 1.1}, {0.02, 1.1}, 100.0);
  const Operator u = gate_propagator(
      pair, expand(symmetrized_cps(channel(0), channel(1)), PulsePolicy::bb1));
  const Operator target = ideal_cps_target(pair, channel(0), channel(1));
  const Operator p = qubit_projector(pair, {channel(0), channel(1)});
  for (auto _ : state) benchmark::DoNotOptimize(subspace_worst_fidelity(target, u, p));
}
BENCHMARK(BM_SubspaceFidelity);

static void BM_FullSpaceFidelity(benchmark::State& state) {
  Rng rng = stream_rng(2, 0);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Operator u0 = random_unitary(dim, rng), u = random_unitary(dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(full_space_worst_fidelity(u0, u));
}
BENCHMARK(BM_FullSpaceFidelity)->Arg(4)->Arg(9)->Arg(27);

static void BM_CatExperiment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> phis{0.0, 0.5, 1.0, 1.5};
  for (auto _ : state)
    benchmark::DoNotOptimize(run_cat_experiment(n, phis, EnsembleSpec{}));
}
BENCHMARK(BM_CatExperiment)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_CouplingGraph(benchmark::State& state) {
  CrystalModel model;
  model.ion_count = static_cast<int>(state.range(0));
  model.threshold = threshold_for_p(model, 0.1);
  const Crystal crystal = sample_crystal(model, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_coupling_graph(crystal, model));
}
BENCHMARK(BM_CouplingGraph)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
