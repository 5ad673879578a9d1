#include <benchmark/benchmark.h>

#include <random>

#include "wwgm/correspondence.hpp"
#include "wwgm/fock_oracle.hpp"
#include "wwgm/ordering.hpp"
#include "wwgm/random_poly.hpp"
#include "wwgm/star_moyal.hpp"
#include "wwgm/w_infinity.hpp"

using namespace wwgm;

static void BM_SOrdered(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_ordered(n, n, Scalar::s()));
}
BENCHMARK(BM_SOrdered)->DenseRange(2, 10, 2);

static void BM_StarSymbolic(benchmark::State& state) {
  std::mt19937 rng(1);
  const int deg = static_cast<int>(state.range(0));
  const PhasePoly f = random::phase_poly(rng, deg, VarPair::qp, false, 6);
  const PhasePoly g = random::phase_poly(rng, deg, VarPair::qp, false, 6);
  for (auto _ : state) benchmark::DoNotOptimize(star(f, g, Scalar::s()));
}
BENCHMARK(BM_StarSymbolic)->DenseRange(2, 8, 2);

static void BM_GammaGenerator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_generator(n, n, Scalar::r(), Scalar::s()));
}
BENCHMARK(BM_GammaGenerator)->DenseRange(1, 4);

static void BM_StructureExpand(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(structure_expand(n, n - 1, n - 1, n, Scalar::r()));
}
BENCHMARK(BM_StructureExpand)->DenseRange(1, 4);

static void BM_MatrixOf(benchmark::State& state) {
  fock::Config cfg;
  cfg.n = static_cast<int>(state.range(0));
  const OpPoly a = s_ordered(3, 3, Scalar(0));
  for (auto _ : state) benchmark::DoNotOptimize(fock::matrix_of(a, cfg));
}
BENCHMARK(BM_MatrixOf)->RangeMultiplier(2)->Range(32, 128);

static void BM_Displacement(benchmark::State& state) {
  fock::Config cfg;
  cfg.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fock::displacement(0.3, -0.2, 0.0, cfg));
}
BENCHMARK(BM_Displacement)->RangeMultiplier(2)->Range(32, 128);

BENCHMARK_MAIN();
