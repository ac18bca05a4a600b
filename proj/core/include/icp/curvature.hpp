#pragma once

#include <vector>

#include "icp/complex.hpp"
#include "icp/geometry.hpp"

namespace icp {

// Per-vertex log-radii with their background geometry.
struct PackingMetric {
  Background background = Background::Euclidean;
  std::vector<double> u;

  double r(int v) const { return radius_from_u(background, u[v]); }
  static PackingMetric constant(Background bg, int n, double radius);
};

// K_v = 2 pi - sum over incident triangles of the half angle at v. Each edge
// [v,j] contributes once per incident face, the marked infinity face and
// edges into the infinity vertex set excluded. Throws when v lies in the
// infinity set or a needed metric value is missing.
double vertex_curvature(const CellComplex& cc, const PackingMetric& m, int v);

// vertex_curvature for every vertex; entries for infinity vertices are 0.
std::vector<double> curvature_field(const CellComplex& cc,
                                    const PackingMetric& m);

// Prescribed targets: 0 for vertices not adjacent to the infinity set,
// sum of 2 Theta over edges into it otherwise. Requires infinity marks.
std::vector<double> prescribed_curvature_hat(const CellComplex& cc);

// Face-based curvature of the dual formulation, with radii indexed by face.
// F_inf = faces incident to a vertex of the infinity set; the sum runs over
// neighbors outside F_inf and alpha is 1 when both faces border F_inf,
// otherwise 2. Note the chord here carries -2 cos(Theta) r r', so this
// operation expects exterior-dihedral weights (the supplement of the
// intersection-angle convention used elsewhere).
double dual_face_curvature(const CellComplex& cc,
                           const std::vector<double>& face_r, int f);

// Linearization of the curvature map: omega_e = -dK_i/du_j >= 0 (symmetric
// in i,j), g_i = -(dK_i/du_i + sum_j dK_i/du_j) <= 0. Edges touching the
// infinity set get omega 0.
struct JacobianWeights {
  std::vector<double> omega;  // edge-indexed
  std::vector<double> g;      // vertex-indexed
};
JacobianWeights flow_jacobian_weights(const CellComplex& cc,
                                      const PackingMetric& m);

// Triangle count of edge e: incident faces, not counting the infinity face.
int edge_multiplicity(const CellComplex& cc, int e);

// Dirichlet energy sum over edges of (u_i - u_j)^2.
double dirichlet_energy(const CellComplex& cc, const std::vector<double>& u);

// Weights in exterior-dihedral convention <-> intersection-angle convention.
CellComplex supplement_weights(const CellComplex& cc);

}  // namespace icp
