#include <benchmark/benchmark.h>

#include "ctqw/oracle.hpp"
#include "ctqw/random_graph.hpp"
#include "ctqw/solver.hpp"
#include "ctqw/spectral.hpp"

namespace {

using namespace ctqw;

Graph half_dense(benchmark::State &state) {
  return gnp(static_cast<std::size_t>(state.range(0)), 0.5, 1234);
}

void BM_Eigendecompose(benchmark::State &state) {
  const Graph g = half_dense(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigendecompose(g));
  }
}
BENCHMARK(BM_Eigendecompose)->RangeMultiplier(2)->Range(16, 128);

void BM_PrincipalIntensities(benchmark::State &state) {
  const Graph g = half_dense(state);
  const EigenSystem es = eigendecompose(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(principal_intensities(es, 0));
  }
}
BENCHMARK(BM_PrincipalIntensities)->RangeMultiplier(2)->Range(16, 128);

void BM_Oracle(benchmark::State &state) {
  const Graph g = half_dense(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_clique_exact(g));
  }
}
BENCHMARK(BM_Oracle)->DenseRange(16, 48, 8)->Unit(benchmark::kMillisecond);

SolverConfig quiet() {
  SolverConfig cfg;
  cfg.record_trace = false;
  return cfg;
}

void BM_AlgorithmA(benchmark::State &state) {
  const Graph g = half_dense(state);
  const SolverConfig cfg = quiet();
  for (auto _ : state) {
    benchmark::DoNotOptimize(algorithm_a(g, cfg));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AlgorithmA)
    ->DenseRange(16, 40, 8)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_AlgorithmB(benchmark::State &state) {
  const Graph g = half_dense(state);
  const SolverConfig cfg = quiet();
  for (auto _ : state) {
    benchmark::DoNotOptimize(algorithm_b(g, cfg));
  }
}
BENCHMARK(BM_AlgorithmB)->DenseRange(16, 32, 8)->Unit(benchmark::kMillisecond);

void BM_AlgorithmC(benchmark::State &state) {
  const Graph g = half_dense(state);
  const SolverConfig cfg = quiet();
  for (auto _ : state) {
    benchmark::DoNotOptimize(algorithm_c(g, cfg));
  }
}
BENCHMARK(BM_AlgorithmC)->DenseRange(16, 48, 8)->Unit(benchmark::kMillisecond);

void BM_Vfsa(benchmark::State &state) {
  const Graph g = half_dense(state);
  const Graph cg = center_subgraph(g, 1);
  const Label ref = cg.label(cg.label(0) == 1 ? 1 : 0);
  const SolverConfig cfg = quiet();
  for (auto _ : state) {
    benchmark::DoNotOptimize(vfsa(cg, 1, ref, cfg));
  }
}
BENCHMARK(BM_Vfsa)->RangeMultiplier(2)->Range(16, 128);

} // namespace

BENCHMARK_MAIN();
