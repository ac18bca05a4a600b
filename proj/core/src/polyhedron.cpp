#include "icp/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace icp {

PolyhedronData polyhedron_from_pattern(
    const CellComplex& cc, const std::vector<SphericalCircle>& circles,
    const PatternLayout& planar_layout) {
  if (static_cast<int>(circles.size()) != cc.n_vertices())
    throw std::invalid_argument("circle count mismatch");

  PolyhedronData out;
  out.circles = circles;
  out.valid.assign(cc.n_vertices(), 0);
  for (int v = 0; v < cc.n_vertices(); ++v)
    out.valid[v] = circles[v].d < 1.5 ? 1 : 0;

  out.min_separation = std::numeric_limits<double>::infinity();
  for (int e = 0; e < cc.n_edges(); ++e) {
    const auto& er = cc.edges[e];
    if (!out.valid[er.u] || !out.valid[er.v]) continue;
    PolyhedronEdge pe;
    pe.edge = e;
    pe.u = er.u;
    pe.v = er.v;
    pe.dihedral = cap_angle(circles[er.u], circles[er.v]);
    out.min_separation =
        std::min(out.min_separation, std::abs(std::sin(pe.dihedral)));
    out.edges.push_back(pe);
  }
  if (out.edges.empty()) out.min_separation = 0.0;

  // The star point of a face lies on every circle around it; its projection
  // is the ideal vertex shared by the corresponding planes.
  out.ideal_vertices.assign(cc.n_faces(), {0, 0, 0});
  out.vertex_valid.assign(cc.n_faces(), 0);
  for (int f = 0; f < cc.n_faces(); ++f) {
    if (f >= static_cast<int>(planar_layout.stars.size())) break;
    const StarPoint& sp = planar_layout.stars[f];
    if (!sp.placed) continue;
    out.ideal_vertices[f] = project_point(sp.x, sp.y);
    out.vertex_valid[f] = 1;
  }
  return out;
}

double polyhedron_incidence_residual(const CellComplex& cc,
                                     const PolyhedronData& data) {
  double worst = 0.0;
  for (int f = 0; f < cc.n_faces(); ++f) {
    if (!data.vertex_valid[f]) continue;
    const auto& p = data.ideal_vertices[f];
    for (int v : cc.face_vertices[f]) {
      if (!data.valid[v]) continue;
      const auto& c = data.circles[v];
      worst = std::max(worst, std::abs(c.n[0] * p[0] + c.n[1] * p[1] +
                                       c.n[2] * p[2] - c.d));
    }
  }
  return worst;
}

}  // namespace icp
