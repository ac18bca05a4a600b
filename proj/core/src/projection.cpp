#include "icp/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace icp {

namespace {

SphericalCircle normalized(double nx, double ny, double nz, double d) {
  const double s = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (!(s > 0.0)) throw std::invalid_argument("degenerate circle");
  return {{nx / s, ny / s, nz / s}, d / s};
}

}  // namespace

SphericalCircle project_circle(double cx, double cy, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  const double q = cx * cx + cy * cy - r * r;
  return normalized(2.0 * cx, 2.0 * cy, q - 1.0, q + 1.0);
}

SphericalCircle project_line(double ax, double ay, double b) {
  return normalized(ax, ay, b, b);
}

std::array<double, 3> project_point(double px, double py) {
  const double q = px * px + py * py;
  return {2.0 * px / (q + 1.0), 2.0 * py / (q + 1.0), (q - 1.0) / (q + 1.0)};
}

std::array<double, 2> unproject_point(const std::array<double, 3>& p) {
  if (!(p[2] < 1.0))
    throw std::invalid_argument("projection pole has no planar image");
  return {p[0] / (1.0 - p[2]), p[1] / (1.0 - p[2])};
}

bool unproject_circle(const SphericalCircle& sc, double& cx, double& cy,
                      double& r, double& ax, double& ay, double& b) {
  const double w = sc.n[2] - sc.d;  // zero iff the circle passes the pole
  if (std::abs(w) < 1e-14) {
    const double s = std::hypot(sc.n[0], sc.n[1]);
    if (!(s > 0.0)) throw std::invalid_argument("degenerate sphere circle");
    ax = sc.n[0] / s;
    ay = sc.n[1] / s;
    b = 0.5 * (sc.n[2] + sc.d) / s;
    return false;
  }
  cx = -sc.n[0] / w;
  cy = -sc.n[1] / w;
  const double r2 = cx * cx + cy * cy + (sc.n[2] + sc.d) / w;
  if (!(r2 > 0.0)) throw std::invalid_argument("sphere circle has no planar image");
  r = std::sqrt(r2);
  return true;
}

double cap_angle(const SphericalCircle& a, const SphericalCircle& b) {
  const double dot =
      a.n[0] * b.n[0] + a.n[1] * b.n[1] + a.n[2] * b.n[2];
  const double den = std::sqrt((1.0 - a.d * a.d) * (1.0 - b.d * b.d));
  if (!(den > 0.0)) throw std::invalid_argument("point circle has no angle");
  return std::acos(std::clamp((dot - a.d * b.d) / den, -1.0, 1.0));
}

double sphere_pattern_angle(const SphericalCircle& a,
                            const SphericalCircle& b) {
  return std::numbers::pi - cap_angle(a, b);
}

std::vector<SphericalCircle> project_layout(const PatternLayout& layout) {
  if (layout.ambient != Ambient::Plane)
    throw std::invalid_argument("projection expects a planar layout");
  std::vector<SphericalCircle> out(layout.circles.size(), {{0, 0, 1}, 2.0});
  for (size_t v = 0; v < layout.circles.size(); ++v) {
    const LayoutCircle& c = layout.circles[v];
    if (c.placed) out[v] = project_circle(c.cx, c.cy, c.r);
  }
  return out;
}

}  // namespace icp
