#include <benchmark/benchmark.h>

#include <random>

#include "spinitf/spinitf.hpp"

using namespace spinitf;

static void BM_RingEigensystem(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ring_eigensystem(n));
}
BENCHMARK(BM_RingEigensystem)->RangeMultiplier(2)->Range(8, 128);

static void BM_Jacobi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SpinNetwork net = apply_bias(build_ring(n), 0, 0.7);
  const Matrix h = single_excitation_hamiltonian(net).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(numeric_eigensystem(h));
}
BENCHMARK(BM_Jacobi)->RangeMultiplier(2)->Range(8, 64);

static void BM_PmaxMatrix(benchmark::State& state) {
  const EigenSystem es = ring_eigensystem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pmax_matrix(es));
}
BENCHMARK(BM_PmaxMatrix)->RangeMultiplier(2)->Range(8, 64);

static void BM_Lll(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  LatticeBasis b;
  for (std::size_t k = 0; k < n; ++k) {
    IntVector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
    b.columns.push_back(v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(b));
}
BENCHMARK(BM_Lll)->DenseRange(2, 10, 2);

static void BM_WeightedApprox(benchmark::State& state) {
  const EigenSystem es = ring_eigensystem(7);
  const ConstraintSystem cs = build_constraints(analyze_transfer(es, 0, 2), es);
  const auto par = parity_from_rhs(cs.parity_rhs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_simultaneous_approx(cs.theta, par, 3e-9, {1.0, 1.0}));
  }
}
BENCHMARK(BM_WeightedApprox);

BENCHMARK_MAIN();
