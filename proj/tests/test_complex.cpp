#include <algorithm>
#include <numbers>

#include "doctest.h"
#include "icp/complex.hpp"
#include "icp/generators.hpp"

using namespace icp;
using std::numbers::pi;

namespace {

// two triangles glued along one edge
CellComplex two_triangles() {
  CellComplex cc;
  cc.labels = {0, 1, 2, 3};
  cc.edges = {{0, 1, pi / 3}, {1, 2, pi / 3}, {2, 0, pi / 3},
              {1, 3, pi / 3}, {3, 2, pi / 3}};
  cc.faces = {{0, 1, 2}, {3, 4, 1}};
  cc.finalize();
  return cc;
}

}  // namespace

TEST_CASE("finalize builds incidence and face cycles") {
  CellComplex cc = two_triangles();
  CHECK(cc.n_vertices() == 4);
  CHECK(cc.degree(1) == 3);
  CHECK(cc.degree(0) == 2);
  CHECK(cc.face_vertices[0].size() == 3);
  // edge k of a face joins cycle positions k and k+1
  for (int f = 0; f < cc.n_faces(); ++f)
    for (size_t k = 0; k < cc.faces[f].size(); ++k) {
      const auto& cyc = cc.face_vertices[f];
      const EdgeRec& e = cc.edges[cc.faces[f][k]];
      const int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      CHECK(((e.u == a && e.v == b) || (e.u == b && e.v == a)));
    }
  // the shared edge 1-2 borders both faces
  CHECK(cc.edge_faces[1][0] != -1);
  CHECK(cc.edge_faces[1][1] != -1);
  CHECK(cc.other_endpoint(0, 0) == 1);
  CHECK_THROWS(cc.other_endpoint(0, 2));
}

TEST_CASE("malformed face cycles are rejected") {
  CellComplex cc;
  cc.labels = {0, 1, 2, 3};
  cc.edges = {{0, 1, 1.0}, {2, 3, 1.0}};
  cc.faces = {{0, 1}};  // edges do not chain
  CHECK_THROWS(cc.finalize());
}

TEST_CASE("face boundary condition") {
  CellComplex cc = two_triangles();
  CHECK(validate_c1(cc).empty());
  cc.edges[0].theta = pi / 3 + 0.01;
  const auto bad = validate_c1(cc);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].face == 0);
  CHECK(bad[0].deficit == doctest::Approx(0.01));
  cc.edges[0].theta = -1.0;
  CHECK_THROWS(validate_c1(cc));
}

TEST_CASE("character and normalized character") {
  CellComplex cc = two_triangles();
  CHECK(cc.character(1) == doctest::Approx(pi));
  CHECK(cc.normalized_character(1) == doctest::Approx((pi - 2 * pi) / 3));
}

TEST_CASE("interior mask on a lattice patch") {
  const auto g = z2_lattice(3, pi / 2);
  const auto mask = g.complex.interior_mask();
  int count = 0;
  for (char c : mask) count += c;
  // a full fan of four squares needs all of (m +- 1, n +- 1) in the ball,
  // so the interior of the radius-3 ball is the radius-1 ball
  CHECK(count == 5);
  CHECK(mask[g.center] == 1);
}

TEST_CASE("hop distances and exhaustion") {
  const auto g = z2_lattice(3, pi / 2);
  const auto d = hop_distances(g.complex, g.center);
  CHECK(d[g.center] == 0);
  CHECK(*std::max_element(d.begin(), d.end()) == 3);
  const auto balls = build_exhaustion(g.complex, g.center, {0, 1, 2, 3});
  CHECK(balls[0].size() == 1);
  CHECK(balls[1].size() == 5);
  CHECK(balls[2].size() == 13);
  CHECK(balls[3].size() == 25);
}

TEST_CASE("dual of the cube is the octahedron") {
  const auto cube = cube_complex(2 * pi / 3).complex;
  const CellComplex oct = dual_complex(cube);
  CHECK(oct.n_vertices() == 6);
  CHECK(oct.n_edges() == 12);
  CHECK(oct.n_faces() == 8);
  for (int v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
  for (const auto& f : oct.face_vertices) CHECK(f.size() == 3);
  // weights carry over edge to edge
  for (const auto& e : oct.edges) CHECK(e.theta == doctest::Approx(2 * pi / 3));
  // dual of the dual has cube combinatorics again
  const auto s = complex_stats(dual_complex(oct));
  CHECK(s.n_vertices == 8);
  CHECK(s.n_faces == 6);
}

TEST_CASE("oriented face cycles traverse shared edges oppositely") {
  const auto cube = cube_complex(2 * pi / 3).complex;
  const auto cycles = oriented_face_cycles(cube);
  REQUIRE(cycles.size() == cube.faces.size());
  // directed edge (a,b) must appear exactly once over all cycles
  std::vector<std::pair<int, int>> seen;
  for (const auto& cyc : cycles)
    for (size_t k = 0; k < cyc.size(); ++k)
      seen.push_back({cyc[k], cyc[(k + 1) % cyc.size()]});
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  CHECK(seen.size() == 2 * cube.edges.size());
}

TEST_CASE("hash is deterministic and sensitive") {
  CellComplex a = two_triangles();
  CellComplex b = two_triangles();
  CHECK(complex_hash(a) == complex_hash(b));
  b.edges[0].theta += 1e-9;
  CHECK(complex_hash(a) != complex_hash(b));
  CellComplex c = two_triangles();
  c.infinity_marks = {3};
  CHECK(complex_hash(a) != complex_hash(c));
}

TEST_CASE("infinity marks merge with the infinity face") {
  CellComplex cc = two_triangles();
  cc.infinity_face = 1;
  cc.infinity_marks = {0};
  cc.finalize();
  const auto vs = cc.infinity_vertices();
  CHECK(vs == std::vector<int>{0, 1, 2, 3});
}
