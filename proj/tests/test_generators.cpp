#include <numbers>

#include "doctest.h"
#include "icp/complex.hpp"
#include "icp/generators.hpp"

using namespace icp;
using std::numbers::pi;

TEST_CASE("square lattice ball") {
  const auto g = z2_lattice(2, pi / 2);
  const CellComplex& cc = g.complex;
  CHECK(cc.n_vertices() == 13);
  REQUIRE(g.grid.size() == 13);
  for (int v = 0; v < cc.n_vertices(); ++v)
    CHECK(std::abs(g.grid[v][0]) + std::abs(g.grid[v][1]) <= 2);
  // all faces are squares and satisfy the face boundary condition
  for (const auto& f : cc.face_vertices) CHECK(f.size() == 4);
  CHECK(validate_c1(cc).empty());
  CHECK(cc.faces.size() == 4);
  CHECK(cc.interior_mask()[g.center] == 1);
}

TEST_CASE("square lattice scales") {
  const auto g = z2_lattice(6, pi / 2);
  // 2R^2 + 2R + 1 vertices in the ball
  CHECK(g.complex.n_vertices() == 85);
  CHECK(validate_c1(g.complex).empty());
  int interior = 0;
  for (char c : g.complex.interior_mask()) interior += c;
  // a full fan of four squares needs all of (m +- 1, n +- 1) in the ball
  CHECK(interior == 41);  // ball of radius 4
}

TEST_CASE("hexagonal tessellation patch") {
  const auto g = hex_lattice(1, 2 * pi / 3);
  const CellComplex& cc = g.complex;
  CHECK(validate_c1(cc).empty());
  for (const auto& f : cc.face_vertices) CHECK(f.size() == 6);
  // central hexagon plus one corona: 6 edge faces and 3 fans per vertex
  CHECK(cc.faces.size() == 25);
}

TEST_CASE("hexagonal tessellation interior vertices") {
  const auto g = hex_lattice(2, 2 * pi / 3);
  const CellComplex& cc = g.complex;
  const auto mask = cc.interior_mask();
  // every interior vertex of the {6,6} tessellation has degree 6
  int interior = 0;
  for (int v = 0; v < cc.n_vertices(); ++v)
    if (mask[v]) {
      CHECK(cc.degree(v) == 6);
      CHECK(cc.normalized_character(v) == doctest::Approx(pi / 3));
      ++interior;
    }
  CHECK(interior > 0);
}

TEST_CASE("hexagonal patch grows combinatorially") {
  const auto g1 = hex_lattice(1, 2 * pi / 3);
  const auto g2 = hex_lattice(2, 2 * pi / 3);
  CHECK(g2.complex.n_faces() > 10 * g1.complex.n_faces());
  CHECK(validate_c1(g2.complex).empty());
  const auto m1 = g1.complex.interior_mask();
  const auto m2 = g2.complex.interior_mask();
  int i1 = 0, i2 = 0;
  for (char c : m1) i1 += c;
  for (char c : m2) i2 += c;
  CHECK(i2 > i1);
}

TEST_CASE("platonic fixtures") {
  const auto cube = cube_complex(2 * pi / 3).complex;
  CHECK(cube.n_vertices() == 8);
  CHECK(cube.n_edges() == 12);
  CHECK(cube.n_faces() == 6);
  for (int v = 0; v < 8; ++v) CHECK(cube.degree(v) == 3);
  for (const auto& f : cube.face_vertices) CHECK(f.size() == 4);
  // Rivin condition: coboundary sum 2pi at every vertex
  for (int v = 0; v < 8; ++v)
    CHECK(cube.character(v) == doctest::Approx(2 * pi));

  const auto dod = dodecahedron_complex(2 * pi / 3).complex;
  CHECK(dod.n_vertices() == 20);
  CHECK(dod.n_edges() == 30);
  CHECK(dod.n_faces() == 12);
  for (int v = 0; v < 20; ++v) CHECK(dod.degree(v) == 3);
  for (const auto& f : dod.face_vertices) CHECK(f.size() == 5);
}

TEST_CASE("named dispatch") {
  CHECK(generate_named("cube", 0, 2.0).complex.n_vertices() == 8);
  CHECK(generate_named("z2_lattice", 2, 1.5).complex.n_vertices() == 13);
  CHECK(generate_named("hex_lattice", 1, 2.0).complex.n_faces() == 25);
  CHECK(generate_named("dodecahedron", 0, 2.0).complex.n_faces() == 12);
  CHECK_THROWS(generate_named("klein_bottle", 1, 1.0));
}
