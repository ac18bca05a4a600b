#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "icp/flow.hpp"
#include "icp/generators.hpp"
#include "icp/layout.hpp"
#include "icp/polyhedron.hpp"
#include "icp/projection.hpp"

using namespace icp;
using std::numbers::pi;

TEST_CASE("unit circle maps to the equator") {
  const SphericalCircle sc = project_circle(0, 0, 1);
  CHECK(sc.n[0] == doctest::Approx(0.0));
  CHECK(sc.n[1] == doctest::Approx(0.0));
  CHECK(sc.n[2] == doctest::Approx(-1.0));
  CHECK(sc.d == doctest::Approx(0.0));
}

TEST_CASE("points of a circle land on its sphere circle") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> d(-3.0, 3.0), rr(0.1, 2.0),
      ph(0.0, 2 * pi);
  for (int k = 0; k < 200; ++k) {
    const double cx = d(rng), cy = d(rng), r = rr(rng), t = ph(rng);
    const SphericalCircle sc = project_circle(cx, cy, r);
    const auto p = project_point(cx + r * std::cos(t), cy + r * std::sin(t));
    CHECK(sc.n[0] * p[0] + sc.n[1] * p[1] + sc.n[2] * p[2] ==
          doctest::Approx(sc.d).epsilon(1e-12));
    // disk interior maps into the cap
    const auto q = project_point(cx, cy);
    CHECK(sc.n[0] * q[0] + sc.n[1] * q[1] + sc.n[2] * q[2] > sc.d);
  }
}

TEST_CASE("projecting then unprojecting is the identity") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> d(-4.0, 4.0), rr(0.05, 3.0);
  for (int k = 0; k < 300; ++k) {
    const double cx = d(rng), cy = d(rng), r = rr(rng);
    double gx, gy, gr, ax, ay, b;
    REQUIRE(unproject_circle(project_circle(cx, cy, r), gx, gy, gr, ax, ay, b));
    CHECK(gx == doctest::Approx(cx).epsilon(1e-12));
    CHECK(gy == doctest::Approx(cy).epsilon(1e-12));
    CHECK(gr == doctest::Approx(r).epsilon(1e-12));

    const auto p = project_point(cx, cy);
    const auto q = unproject_point(p);
    CHECK(q[0] == doctest::Approx(cx).epsilon(1e-12));
    CHECK(q[1] == doctest::Approx(cy).epsilon(1e-12));
  }
}

TEST_CASE("lines map to circles through the pole") {
  const SphericalCircle sc = project_line(1, 0, 0.5);
  CHECK(sc.n[2] == doctest::Approx(sc.d).epsilon(1e-15));  // pole incidence
  double gx, gy, gr, ax, ay, b;
  CHECK_FALSE(unproject_circle(sc, gx, gy, gr, ax, ay, b));
  CHECK(ax == doctest::Approx(1.0));
  CHECK(ay == doctest::Approx(0.0));
  CHECK(b == doctest::Approx(0.5));
}

TEST_CASE("projection preserves intersection angles") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> d(-2.0, 2.0), rr(0.3, 1.5);
  int checked = 0;
  while (checked < 200) {
    LayoutCircle a, b;
    a.cx = d(rng);
    a.cy = d(rng);
    a.r = rr(rng);
    b.cx = d(rng);
    b.cy = d(rng);
    b.r = rr(rng);
    const double dist = std::hypot(a.cx - b.cx, a.cy - b.cy);
    if (dist >= a.r + b.r || dist <= std::abs(a.r - b.r)) continue;  // disjoint
    ++checked;
    const double planar = realized_intersection_angle(a, b);
    const double spherical = sphere_pattern_angle(
        project_circle(a.cx, a.cy, a.r), project_circle(b.cx, b.cy, b.r));
    CHECK(spherical == doctest::Approx(planar).epsilon(1e-9));
  }
}

TEST_CASE("orthogonal circles stay orthogonal on the sphere") {
  const auto a = project_circle(0, 0, 1);
  const auto b = project_circle(std::sqrt(2.0), 0, 1);
  CHECK(sphere_pattern_angle(a, b) == doctest::Approx(pi / 2).epsilon(1e-12));
  CHECK(cap_angle(a, b) == doctest::Approx(pi / 2).epsilon(1e-12));
}

TEST_CASE("half spaces of the lattice pattern meet at the right angle") {
  const auto g = z2_lattice(3, pi / 2);
  const auto m =
      PackingMetric::constant(Background::Euclidean, g.complex.n_vertices(), 1.0);
  const auto layout = embed(g.complex, m);
  const auto circles = project_layout(layout);
  const auto data = polyhedron_from_pattern(g.complex, circles, layout);
  CHECK(!data.edges.empty());
  for (const auto& e : data.edges)
    CHECK(e.dihedral == doctest::Approx(pi - pi / 2).epsilon(1e-9));
  // ideal vertices lie on every incident supporting plane
  CHECK(polyhedron_incidence_residual(g.complex, data) < 1e-9);
  CHECK(data.min_separation > 0.1);
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS(project_circle(0, 0, 0));
  CHECK_THROWS(unproject_point({0, 0, 1}));
  CHECK_THROWS(cap_angle({{0, 0, 1}, 1.0}, {{0, 0, 1}, 0.0}));
}
