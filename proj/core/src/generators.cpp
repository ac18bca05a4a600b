#include "icp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace icp {

namespace {

// Build the edge array and edge-index face lists from faces given as vertex
// cycles. Extra edges not on any face can be passed explicitly.
CellComplex from_face_cycles(int n_vertices,
                             const std::vector<std::vector<int>>& cycles,
                             const std::vector<std::array<int, 2>>& loose,
                             double theta) {
  CellComplex cc;
  cc.labels.resize(n_vertices);
  for (int v = 0; v < n_vertices; ++v) cc.labels[v] = v;

  std::map<std::pair<int, int>, int> edge_of;
  auto get_edge = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = edge_of.find(key);
    if (it != edge_of.end()) return it->second;
    const int idx = cc.n_edges();
    cc.edges.push_back({key.first, key.second, theta});
    edge_of.emplace(key, idx);
    return idx;
  };

  for (const auto& cyc : cycles) {
    const int m = static_cast<int>(cyc.size());
    std::vector<int> fe(m);
    for (int k = 0; k < m; ++k) fe[k] = get_edge(cyc[k], cyc[(k + 1) % m]);
    cc.faces.push_back(std::move(fe));
  }
  for (const auto& e : loose) get_edge(e[0], e[1]);
  cc.finalize();
  return cc;
}

}  // namespace

GeneratedComplex z2_lattice(int radius, double theta) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  std::map<std::pair<int, int>, int> id;
  GeneratedComplex g;
  for (int m = -radius; m <= radius; ++m)
    for (int n = -radius; n <= radius; ++n)
      if (std::abs(m) + std::abs(n) <= radius) {
        id[{m, n}] = static_cast<int>(g.grid.size());
        g.grid.push_back({m, n});
      }
  auto at = [&](int m, int n) {
    auto it = id.find({m, n});
    return it == id.end() ? -1 : it->second;
  };

  std::vector<std::vector<int>> cycles;
  std::vector<std::array<int, 2>> loose;
  for (const auto& [mn, v] : id) {
    const auto [m, n] = mn;
    const int r = at(m + 1, n), t = at(m, n + 1);
    const int rt = at(m + 1, n + 1);
    if (r != -1 && t != -1 && rt != -1)
      cycles.push_back({v, r, rt, t});
    else {
      if (r != -1) loose.push_back({v, r});
      if (t != -1) loose.push_back({v, t});
    }
    if (r != -1 && rt != -1 && t == -1) loose.push_back({r, rt});
    if (t != -1 && rt != -1 && r == -1) loose.push_back({t, rt});
  }
  g.complex =
      from_face_cycles(static_cast<int>(g.grid.size()), cycles, loose, theta);
  g.center = at(0, 0);
  return g;
}

GeneratedComplex hex_lattice(int layers, double theta) {
  if (layers < 0) throw std::invalid_argument("layers must be >= 0");
  constexpr int p = 6;  // face size
  constexpr int q = 6;  // faces per interior vertex

  int n_vertices = p;
  std::vector<std::vector<int>> cycles;
  std::vector<int> nfaces(p, 1);
  std::vector<int> boundary(p);
  cycles.push_back({0, 1, 2, 3, 4, 5});
  for (int k = 0; k < p; ++k) boundary[k] = k;

  auto fresh = [&]() {
    nfaces.push_back(0);
    return n_vertices++;
  };
  auto add_face = [&](std::vector<int> cyc) {
    for (int v : cyc) ++nfaces[v];
    cycles.push_back(std::move(cyc));
  };

  for (int layer = 0; layer < layers; ++layer) {
    const int B = static_cast<int>(boundary.size());
    std::vector<int> deficit(B);
    for (int k = 0; k < B; ++k) {
      deficit[k] = q - nfaces[boundary[k]] - 2;
      if (deficit[k] < 0)
        throw std::runtime_error("boundary vertex oversaturated");
    }

    std::vector<int> next_boundary;
    int carry = -1;       // outer vertex of the previous face adjacent to the
                          // current pivot vertex
    int first_a1 = -1;    // first edge-face's outer vertex adjacent to v0
    for (int k = 0; k < B; ++k) {
      const int a = boundary[k], b = boundary[(k + 1) % B];
      const bool last_edge_face = (k == B - 1);
      // hexagon across the boundary edge (a, b), cycle traverses b -> a
      std::vector<int> cyc = {b, a};
      for (int t = 0; t < p - 2; ++t) {
        int w;
        if (t == 0 && carry != -1)
          w = carry;
        else if (t == p - 3 && last_edge_face && deficit[0] == 0)
          w = first_a1;
        else {
          w = fresh();
          next_boundary.push_back(w);
        }
        cyc.push_back(w);
      }
      if (k == 0) first_a1 = cyc[2];
      carry = cyc.back();
      add_face(std::move(cyc));

      // fan hexagons around b, between the edge faces on its two sides
      const int kb = (k + 1) % B;
      const int fans = deficit[kb];
      for (int t = 0; t < fans; ++t) {
        std::vector<int> fc = {b, carry};
        const bool closing = last_edge_face && t == fans - 1;
        for (int s = 0; s < p - 2; ++s) {
          int w;
          if (s == p - 3 && closing)
            w = first_a1;
          else {
            w = fresh();
            next_boundary.push_back(w);
          }
          fc.push_back(w);
        }
        carry = fc.back();
        add_face(std::move(fc));
      }
    }
    boundary = std::move(next_boundary);
  }

  GeneratedComplex g;
  g.complex = from_face_cycles(n_vertices, cycles, {}, theta);
  g.center = 0;

  // sanity: interior vertices carry a closed fan of q hexagons
  const auto mask = g.complex.interior_mask();
  for (int v = 0; v < g.complex.n_vertices(); ++v)
    if (mask[v] && g.complex.degree(v) != q)
      throw std::runtime_error("tessellation patch is inconsistent");
  return g;
}

namespace {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
Vec3 sub(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Faces of a convex polyhedron given its vertices, by walking directed edges
// with the rotation order around each vertex.
GeneratedComplex complex_from_convex_points(const std::vector<Vec3>& pts,
                                            double theta) {
  const int n = static_cast<int>(pts.size());
  double min_d = 1e300;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      min_d = std::min(min_d, norm(sub(pts[i], pts[j])));

  std::vector<std::vector<int>> nbr(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && norm(sub(pts[i], pts[j])) < 1.2 * min_d)
        nbr[i].push_back(j);

  // sort neighbors counterclockwise around the outward direction
  for (int i = 0; i < n; ++i) {
    const Vec3 nrm = scale(pts[i], 1.0 / norm(pts[i]));
    Vec3 t1 = cross(nrm, std::abs(nrm[0]) < 0.9 ? Vec3{1, 0, 0}
                                                : Vec3{0, 1, 0});
    t1 = scale(t1, 1.0 / norm(t1));
    const Vec3 t2 = cross(nrm, t1);
    std::sort(nbr[i].begin(), nbr[i].end(), [&](int a, int b) {
      const Vec3 da = sub(pts[a], pts[i]), db = sub(pts[b], pts[i]);
      return std::atan2(dot(da, t2), dot(da, t1)) <
             std::atan2(dot(db, t2), dot(db, t1));
    });
  }

  auto succ = [&](int at, int from, int step) {
    const auto& ring = nbr[at];
    const int d = static_cast<int>(ring.size());
    for (int k = 0; k < d; ++k)
      if (ring[k] == from) return ring[((k + step) % d + d) % d];
    throw std::logic_error("missing neighbor");
  };

  // trace directed-edge orbits; step -1 and +1 trace the two orientations,
  // either yields each face once
  std::map<std::pair<int, int>, char> seen;
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < n; ++i)
    for (int j : nbr[i]) {
      if (seen.count({i, j})) continue;
      std::vector<int> cyc;
      int a = i, b = j;
      do {
        seen[{a, b}] = 1;
        cyc.push_back(a);
        const int c = succ(b, a, -1);
        a = b;
        b = c;
      } while (!(a == i && b == j));
      cycles.push_back(std::move(cyc));
    }

  GeneratedComplex g;
  g.complex = from_face_cycles(n, cycles, {}, theta);
  g.center = 0;
  return g;
}

}  // namespace

GeneratedComplex cube_complex(double theta) {
  std::vector<Vec3> pts;
  for (int s = 0; s < 8; ++s)
    pts.push_back({s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0,
                   s & 4 ? 1.0 : -1.0});
  return complex_from_convex_points(pts, theta);
}

GeneratedComplex dodecahedron_complex(double theta) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> pts;
  for (int s = 0; s < 8; ++s)
    pts.push_back({s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0,
                   s & 4 ? 1.0 : -1.0});
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      pts.push_back({0.0, s1 / phi, s2 * phi});
      pts.push_back({s1 / phi, s2 * phi, 0.0});
      pts.push_back({s2 * phi, 0.0, s1 / phi});
    }
  return complex_from_convex_points(pts, theta);
}

GeneratedComplex generate_named(const std::string& name, int size,
                                double theta) {
  if (name == "z2_lattice") return z2_lattice(size, theta);
  if (name == "hex_lattice") return hex_lattice(size, theta);
  if (name == "cube") return cube_complex(theta);
  if (name == "dodecahedron") return dodecahedron_complex(theta);
  throw std::invalid_argument("unknown generator: " + name);
}

}  // namespace icp
