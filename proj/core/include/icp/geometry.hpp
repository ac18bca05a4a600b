#pragma once

#include <utility>

namespace icp {

enum class Background { Euclidean, Hyperbolic };

// Conformal coordinate of a radius: u = ln r (Euclidean), u = ln tanh(r/2)
// (hyperbolic, so u < 0).
double u_from_radius(Background bg, double r);
double radius_from_u(Background bg, double u);

// Distance between the centers of two circles of radii ri, rj meeting at
// exterior angle theta_big in (0, pi).
double edge_length(Background bg, double ri, double rj, double theta_big);

// Angle at the center of circle i in the triangle (center i, center j,
// intersection point). For ri == rj the Euclidean value is exactly
// theta_big / 2.
double half_angle(Background bg, double ri, double rj, double theta_big);

// Partial derivatives of half_angle with respect to u_i and u_j.
// first: d(theta_ij)/d(u_i) <= 0, second: d(theta_ij)/d(u_j) >= 0.
std::pair<double, double> d_half_angle_d_u(Background bg, double ri, double rj,
                                           double theta_big);

// Hyperbolic equal-radius half angle via the closed form
//   sin^2 theta = sin^2 T / (2(1+cos T) + (1+cos T)^2 sinh^2 t).
// Exposed for cross-checking the generic half_angle path.
double equal_radius_half_angle_hyperbolic(double t, double theta_big);

// Smallest L such that the hyperbolic half angle is < eps whenever ri > L,
// uniformly in rj. Returns 0 when eps >= theta_big.
double theta_upper_bound_radius(double eps, double theta_big);

// Supremum of the hyperbolic half angle over rj at fixed ri (the rj -> inf
// limit). Strictly decreasing in ri, tends to theta_big as ri -> 0.
double half_angle_sup(double ri, double theta_big);

}  // namespace icp
