//- Micro-benchmarks for the hot paths: state sampling, marginals, edge
//- vectors, composite measures, geometric solves, and a small convex
//- roof. Inputs are fixed-seed random states so runs are comparable.

#include <benchmark/benchmark.h>

#include "gme/bipartite.hpp"
#include "gme/convex_roof.hpp"
#include "gme/geometry.hpp"
#include "gme/partition.hpp"
#include "gme/quadripartite.hpp"
#include "gme/state.hpp"
#include "gme/tripartite.hpp"

namespace {

const std::vector<int> kThreeQubits{2, 2, 2};
const std::vector<int> kFourQubits{2, 2, 2, 2};

void bm_haar_three_qubits(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::haar_random_pure(kThreeQubits, seed++));
  }
}
BENCHMARK(bm_haar_three_qubits);

void bm_partial_trace_pair(benchmark::State& state) {
  gme::DensityMatrix rho =
      gme::density_of(gme::haar_random_pure(kFourQubits, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::partial_trace(rho, {0, 2}));
  }
}
BENCHMARK(bm_partial_trace_pair);

void bm_pure_tangle_cut(benchmark::State& state) {
  gme::PureState psi = gme::haar_random_pure(kThreeQubits, 7);
  gme::Partition cut = gme::make_partition({{0}, {1, 2}});
  gme::MeasureDescriptor d;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::pure_measure(psi, cut, d));
  }
}
BENCHMARK(bm_pure_tangle_cut);

void bm_edge_vector_three(benchmark::State& state) {
  gme::PureState psi = gme::haar_random_pure(kThreeQubits, 7);
  gme::MeasureDescriptor d;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::edge_vector_3(psi, d));
  }
}
BENCHMARK(bm_edge_vector_three);

void bm_tau3(benchmark::State& state) {
  gme::PureState psi = gme::haar_random_pure(kThreeQubits, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::tau3(psi));
  }
}
BENCHMARK(bm_tau3);

void bm_edge_vector_four_bip(benchmark::State& state) {
  gme::PureState psi = gme::haar_random_pure(kFourQubits, 7);
  gme::MeasureDescriptor d;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::edge_vector_4_bip(psi, d));
  }
}
BENCHMARK(bm_edge_vector_four_bip);

void bm_edge_vector_four_tri(benchmark::State& state) {
  gme::PureState psi = gme::haar_random_pure(kFourQubits, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::edge_vector_4_tri(psi, gme::TriKind::TAU3));
  }
}
BENCHMARK(bm_edge_vector_four_tri);

void bm_gamma_star(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::gamma_star(1.0, 0.75, 0.75));
  }
}
BENCHMARK(bm_gamma_star);

void bm_cayley_menger_volume(benchmark::State& state) {
  gme::TetraEdges edges{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::cayley_menger_volume(edges));
  }
}
BENCHMARK(bm_cayley_menger_volume);

void bm_tetra_analysis(benchmark::State& state) {
  gme::PureState psi = gme::haar_random_pure(kFourQubits, 7);
  gme::MeasureDescriptor d;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::tetra_analysis(psi, gme::TriKind::TAU3, d, 1.0));
  }
}
BENCHMARK(bm_tetra_analysis);

void bm_roof_two_qubit_rank2(benchmark::State& state) {
  //- Rank-2 two-qubit mixture; light budget so one iteration stays in
  //- the millisecond range.
  gme::PureState a = gme::haar_random_pure({2, 2}, 11);
  gme::PureState b = gme::haar_random_pure({2, 2}, 12);
  gme::Matrix mix = 0.6 * gme::density_of(a).matrix + 0.4 * gme::density_of(b).matrix;
  gme::DensityMatrix rho = gme::make_density_matrix(mix, {2, 2});
  gme::Partition cut = gme::make_partition({{0}, {1}});
  gme::MeasureDescriptor d;
  d.kind = gme::MeasureKind::CONCURRENCE;
  gme::RoofConfig cfg;
  cfg.restarts = 2;
  cfg.max_iterations = 50;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gme::mixed_measure(rho, cut, d, cfg));
  }
}
BENCHMARK(bm_roof_two_qubit_rank2);

}  // namespace

BENCHMARK_MAIN();
