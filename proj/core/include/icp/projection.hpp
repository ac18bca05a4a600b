#pragma once

#include <array>

#include "icp/layout.hpp"

namespace icp {

// Circle on the unit sphere, cut out by the plane n . x = d with |n| = 1 and
// |d| < 1. The associated cap (disk side) is n . x > d.
struct SphericalCircle {
  std::array<double, 3> n;
  double d;
};

// Inverse stereographic projection from the plane z = 0 through the north
// pole (0, 0, 1): a planar circle maps to a spherical circle whose cap is
// the image of the disk interior.
SphericalCircle project_circle(double cx, double cy, double r);

// A line a . p = b with |a| = 1 maps to a circle through the pole; the cap is
// the image of the half plane a . p > b.
SphericalCircle project_line(double ax, double ay, double b);

// Image of a planar point under inverse stereographic projection.
std::array<double, 3> project_point(double px, double py);
// Forward projection; throws for the pole itself.
std::array<double, 2> unproject_point(const std::array<double, 3>& p);

// Planar preimage of a spherical circle. Returns true and fills (cx, cy, r)
// when it is a circle; returns false and fills (ax, ay, b) as a line
// a . p = b when the sphere circle passes through the pole.
bool unproject_circle(const SphericalCircle& sc, double& cx, double& cy,
                      double& r, double& ax, double& ay, double& b);

// Angle between two sphere circles in the cap convention (the dihedral angle
// between the cap boundary planes, measured outside both caps).
double cap_angle(const SphericalCircle& a, const SphericalCircle& b);

// Supplement of cap_angle; agrees with the stored edge-weight convention and
// with realized_intersection_angle of the planar preimages.
double sphere_pattern_angle(const SphericalCircle& a, const SphericalCircle& b);

// Per-vertex spherical circles of a planar layout (unplaced circles get
// d = 2 as a sentinel and should be skipped by callers).
std::vector<SphericalCircle> project_layout(const PatternLayout& layout);

}  // namespace icp
