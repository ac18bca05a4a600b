#pragma once

#include <array>
#include <vector>

#include "icp/complex.hpp"
#include "icp/curvature.hpp"

namespace icp {

enum class Ambient { Plane, Disk };

// One embedded circle. cx, cy, r are always the Euclidean representation
// (what gets drawn); in the disk ambient hx, hy is the hyperbolic center and
// hr the hyperbolic radius, with (cx, cy, r) the Euclidean circle that
// represents it in the Poincare model.
struct LayoutCircle {
  int v = -1;
  bool placed = false;
  double cx = 0, cy = 0, r = 0;
  double hx = 0, hy = 0, hr = 0;
};

struct StarPoint {
  int face = -1;
  bool placed = false;
  double x = 0, y = 0;
};

struct PatternLayout {
  Ambient ambient = Ambient::Plane;
  std::vector<LayoutCircle> circles;  // index = vertex
  std::vector<StarPoint> stars;       // index = face
  // worst length misclosure over triangles whose third point was already
  // placed, split by whether the triangle touches a non-interior vertex
  double misclosure_interior = 0.0;
  double misclosure_rim = 0.0;
  int worst_face = -1;
  double diameter = 0.0;  // bounding-box diagonal of the placed centers
};

// Breadth-first realization of the metric as a circle pattern. Each face f
// splits into corner triangles (v_k, v_{k+1}, star_f) with side lengths
// (r_{v_k}, r_{v_{k+1}}, l_edge); triangles are laid out with a consistent
// orientation from one seed face. Faces touching the infinity set are
// skipped. seed_face = -1 picks the first eligible face.
PatternLayout embed(const CellComplex& cc, const PackingMetric& m,
                    int seed_face = -1);

// Intersection angle of two realized circles from the center distance, in
// the same convention as the stored edge weights. Works for both ambients
// (the Poincare representation is conformal).
double realized_intersection_angle(const LayoutCircle& a,
                                   const LayoutCircle& b);

// Realized angle sum around each vertex over its incident corner triangles
// (hyperbolic angles in the disk ambient). NaN where the vertex or one of
// its stars is unplaced.
std::vector<double> realized_angle_sums(const CellComplex& cc,
                                        const PatternLayout& layout);

// Orientation-preserving rigid motion p -> R p + t.
struct RigidMotion {
  double c = 1, s = 0, tx = 0, ty = 0;
  std::array<double, 2> apply(double x, double y) const {
    return {c * x - s * y + tx, s * x + c * y + ty};
  }
};

// Least-squares rigid motion taking point set a onto b (same length).
RigidMotion best_rigid_alignment(const std::vector<std::array<double, 2>>& a,
                                 const std::vector<std::array<double, 2>>& b);

// RMS distance between b and the aligned image of a.
double rms_after_alignment(const std::vector<std::array<double, 2>>& a,
                           const std::vector<std::array<double, 2>>& b);

}  // namespace icp
