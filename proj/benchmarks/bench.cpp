#include <benchmark/benchmark.h>

#include "hardycomp/gliding_hump.hpp"
#include "hardycomp/hardy.hpp"
#include "hardycomp/lacunary.hpp"
#include "hardycomp/nevanlinna.hpp"
#include "hardycomp/roots.hpp"
#include "hardycomp/rng.hpp"

using namespace hardycomp;

static void BM_HpNorm(benchmark::State& state) {
  const QuadratureGrid grid = QuadratureGrid::uniform(static_cast<int>(state.range(0)));
  const TestFunction g{{0.9, 0.0}, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hp_norm([&](Complex z) { return g(z); }, 2.0, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HpNorm)->Arg(1024)->Arg(8192)->Arg(65536);

static void BM_ComposedTestMass(benchmark::State& state) {
  const QuadratureGrid grid = QuadratureGrid::uniform();
  const Symbol phi = Symbol::half_plus();
  const double radius = 1.0 - std::ldexp(1.0, -static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(composed_test_mass(phi, {radius, 0.0}, 2.0, grid).mass);
  }
}
BENCHMARK(BM_ComposedTestMass)->Arg(4)->Arg(8)->Arg(12);

static void BM_PolyRoots(benchmark::State& state) {
  Rng rng(1);
  Poly coeffs(state.range(0) + 1);
  for (auto& c : coeffs) c = rng.gaussian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_roots(coeffs));
  }
}
BENCHMARK(BM_PolyRoots)->Arg(5)->Arg(16)->Arg(64);

static void BM_CountingRatio(benchmark::State& state) {
  const Symbol phi = Symbol::compose(Symbol::power(3), Symbol::mobius({0.4, 0.1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(counting_ratio(phi, {0.95, 0.01}));
  }
}
BENCHMARK(BM_CountingRatio);

static void BM_GramMatrix(benchmark::State& state) {
  const std::vector<int> powers = {0, 1, 2, 4, 8, 16};
  const QuadratureGrid grid = QuadratureGrid::uniform();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram_matrix(Symbol::power(2), powers, grid));
  }
}
BENCHMARK(BM_GramMatrix);

static void BM_HumpSelect(benchmark::State& state) {
  const Symbol phi = Symbol::half_plus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_hump_pipeline(phi, 1.0, 0.0, 0.1, static_cast<int>(state.range(0)), 200, 0, 7));
  }
}
BENCHMARK(BM_HumpSelect)->Arg(3)->Arg(6);

BENCHMARK_MAIN();
