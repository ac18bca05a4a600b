#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "icp/flow.hpp"
#include "icp/generators.hpp"
#include "icp/layout.hpp"

using namespace icp;
using std::numbers::pi;

TEST_CASE("unit lattice pattern lays out on the scaled grid") {
  const auto g = z2_lattice(3, pi / 2);
  const auto m =
      PackingMetric::constant(Background::Euclidean, g.complex.n_vertices(), 1.0);
  const auto layout = embed(g.complex, m);
  std::vector<std::array<double, 2>> got, want;
  const double s = std::sqrt(2.0);  // center distance of orthogonal unit circles
  for (int v = 0; v < g.complex.n_vertices(); ++v) {
    // the four extreme corners touch no face and stay unplaced
    if (!layout.circles[v].placed) {
      CHECK(std::abs(g.grid[v][0]) + std::abs(g.grid[v][1]) == 3);
      continue;
    }
    CHECK(layout.circles[v].r == doctest::Approx(1.0));
    got.push_back({layout.circles[v].cx, layout.circles[v].cy});
    want.push_back({s * g.grid[v][0], s * g.grid[v][1]});
  }
  CHECK(got.size() >= 21);
  CHECK(rms_after_alignment(got, want) < 1e-12);
  CHECK(layout.misclosure_interior < 1e-12);
  CHECK(layout.diameter > 0.0);
}

TEST_CASE("layouts from different seeds agree up to a rigid motion") {
  const auto g = z2_lattice(3, pi / 2);
  PackingMetric m =
      PackingMetric::constant(Background::Euclidean, g.complex.n_vertices(), 1.0);
  const auto a = embed(g.complex, m, 0);
  const auto b = embed(g.complex, m, g.complex.n_faces() - 1);
  std::vector<std::array<double, 2>> pa, pb;
  for (int v = 0; v < g.complex.n_vertices(); ++v) {
    if (!a.circles[v].placed || !b.circles[v].placed) continue;
    pa.push_back({a.circles[v].cx, a.circles[v].cy});
    pb.push_back({b.circles[v].cx, b.circles[v].cy});
  }
  CHECK(rms_after_alignment(pa, pb) < 1e-6);
}

TEST_CASE("realized intersection angles match the prescribed weights") {
  const auto g = z2_lattice(4, pi / 2);
  PackingMetric m =
      PackingMetric::constant(Background::Euclidean, g.complex.n_vertices(), 1.0);
  const auto mask = g.complex.interior_mask();
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> d(-0.25, 0.25);
  for (int v = 0; v < g.complex.n_vertices(); ++v)
    if (mask[v]) m.u[v] += d(rng);
  const auto trace = integrate(g.complex, m, {});
  REQUIRE(trace.converged);
  PackingMetric mc;
  mc.background = Background::Euclidean;
  mc.u = trace.u_final;
  const auto layout = embed(g.complex, mc);
  for (int e = 0; e < g.complex.n_edges(); ++e) {
    const auto& er = g.complex.edges[e];
    if (!mask[er.u] || !mask[er.v]) continue;
    const double a =
        realized_intersection_angle(layout.circles[er.u], layout.circles[er.v]);
    CHECK(a == doctest::Approx(er.theta).epsilon(1e-6));
  }
  // interior cone angles close up
  const auto sums = realized_angle_sums(g.complex, layout);
  for (int v = 0; v < g.complex.n_vertices(); ++v)
    if (mask[v]) CHECK(sums[v] == doctest::Approx(2 * pi).epsilon(1e-9));
}

TEST_CASE("hyperbolic pattern stays inside the unit disk") {
  const auto g = hex_lattice(2, 2 * pi / 3);
  const auto m0 = initial_metric_hyperbolic_character(g.complex, 1.0);
  FlowConfig cfg;
  cfg.background = Background::Hyperbolic;
  const auto trace = integrate(g.complex, m0, cfg);
  REQUIRE(trace.converged);
  PackingMetric mc;
  mc.background = Background::Hyperbolic;
  mc.u = trace.u_final;
  const auto layout = embed(g.complex, mc);
  CHECK(layout.ambient == Ambient::Disk);
  int placed = 0;
  for (const auto& c : layout.circles) {
    if (!c.placed) continue;
    ++placed;
    CHECK(std::hypot(c.cx, c.cy) + c.r <= 1.0 + 1e-12);
    CHECK(c.hr > 0.0);
  }
  CHECK(placed > 100);
  // conformal model: Euclidean circle representation keeps the angles
  const auto mask = g.complex.interior_mask();
  for (int e = 0; e < g.complex.n_edges(); ++e) {
    const auto& er = g.complex.edges[e];
    if (!mask[er.u] || !mask[er.v]) continue;
    CHECK(realized_intersection_angle(layout.circles[er.u],
                                      layout.circles[er.v]) ==
          doctest::Approx(er.theta).epsilon(1e-6));
  }
}

TEST_CASE("alignment recovers a planted rigid motion") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  std::vector<std::array<double, 2>> a, b;
  const double phi = 0.83, tx = 1.5, ty = -0.25;
  for (int k = 0; k < 40; ++k) {
    const double x = d(rng), y = d(rng);
    a.push_back({x, y});
    b.push_back({std::cos(phi) * x - std::sin(phi) * y + tx,
                 std::sin(phi) * x + std::cos(phi) * y + ty});
  }
  const RigidMotion rm = best_rigid_alignment(a, b);
  CHECK(rm.c == doctest::Approx(std::cos(phi)).epsilon(1e-12));
  CHECK(rm.s == doctest::Approx(std::sin(phi)).epsilon(1e-12));
  CHECK(rms_after_alignment(a, b) < 1e-12);
}

TEST_CASE("empty and degenerate layouts") {
  CellComplex cc;
  cc.finalize();
  PackingMetric m;
  const auto layout = embed(cc, m);
  CHECK(layout.circles.empty());
  CHECK_THROWS(best_rigid_alignment({}, {}));
}
