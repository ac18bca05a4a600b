#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "icp/curvature.hpp"
#include "icp/flow.hpp"
#include "icp/generators.hpp"
#include "icp/geometry.hpp"
#include "icp/layout.hpp"

using namespace icp;
using std::numbers::pi;

static void BM_HalfAngleEuclidean(benchmark::State& state) {
  double r = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(half_angle(Background::Euclidean, r, 2.0, pi / 3));
    r = r < 2.0 ? r + 1e-6 : 1.0;
  }
}
BENCHMARK(BM_HalfAngleEuclidean);

static void BM_HalfAngleHyperbolic(benchmark::State& state) {
  double r = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        half_angle(Background::Hyperbolic, r, 2.0, pi / 3));
    r = r < 2.0 ? r + 1e-6 : 1.0;
  }
}
BENCHMARK(BM_HalfAngleHyperbolic);

static void BM_CurvatureField(benchmark::State& state) {
  const auto g = z2_lattice(static_cast<int>(state.range(0)), pi / 2);
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> d(-0.2, 0.2);
  PackingMetric m = PackingMetric::constant(Background::Euclidean,
                                            g.complex.n_vertices(), 1.0);
  for (double& x : m.u) x += d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(curvature_field(g.complex, m));
  state.SetItemsProcessed(state.iterations() * g.complex.n_vertices());
}
BENCHMARK(BM_CurvatureField)->Arg(8)->Arg(16)->Arg(32);

static void BM_FlowToTolerance(benchmark::State& state) {
  const auto g = z2_lattice(static_cast<int>(state.range(0)), pi / 2);
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> d(-0.2, 0.2);
  PackingMetric m = PackingMetric::constant(Background::Euclidean,
                                            g.complex.n_vertices(), 1.0);
  const auto mask = g.complex.interior_mask();
  for (int v = 0; v < g.complex.n_vertices(); ++v)
    if (mask[v]) m.u[v] += d(rng);
  for (auto _ : state) {
    const auto trace = integrate(g.complex, m, {});
    benchmark::DoNotOptimize(trace.t_final);
  }
}
BENCHMARK(BM_FlowToTolerance)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Embed(benchmark::State& state) {
  const auto g = z2_lattice(static_cast<int>(state.range(0)), pi / 2);
  const auto m = PackingMetric::constant(Background::Euclidean,
                                         g.complex.n_vertices(), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(embed(g.complex, m));
  state.SetItemsProcessed(state.iterations() * g.complex.n_faces());
}
BENCHMARK(BM_Embed)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
