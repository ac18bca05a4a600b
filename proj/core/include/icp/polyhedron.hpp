#pragma once

#include <array>
#include <vector>

#include "icp/complex.hpp"
#include "icp/projection.hpp"

namespace icp {

struct PolyhedronEdge {
  int edge = -1;  // edge index in the source complex
  int u = -1, v = -1;
  double dihedral = 0.0;  // exterior dihedral between the two face planes
};

// Half-space description of the ideal polyhedron cut out by a spherical
// circle pattern: one supporting circle per vertex, the half space being the
// side of the plane n . x <= d (away from the cap), and one ideal vertex per
// face of the pattern, lying on all incident planes.
struct PolyhedronData {
  std::vector<SphericalCircle> circles;            // per pattern vertex
  std::vector<char> valid;                         // circle usable
  std::vector<PolyhedronEdge> edges;
  std::vector<std::array<double, 3>> ideal_vertices;  // per pattern face
  std::vector<char> vertex_valid;
  double min_separation = 0.0;  // smallest |sin(dihedral)|; conditioning
};

// Builds half spaces and per-edge dihedral angles from projected circles.
// The dihedral at an edge equals pi minus the stored pattern weight when the
// input metric was converged. Circles with the d = 2 sentinel are skipped.
PolyhedronData polyhedron_from_pattern(
    const CellComplex& cc, const std::vector<SphericalCircle>& circles,
    const PatternLayout& planar_layout);

// Largest violation of "ideal vertex lies on every incident plane".
double polyhedron_incidence_residual(const CellComplex& cc,
                                     const PolyhedronData& data);

}  // namespace icp
