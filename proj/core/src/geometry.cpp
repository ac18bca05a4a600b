#include "icp/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace icp {

namespace {

constexpr double kLn2 = 0.6931471805599453;

void check_args(double ri, double rj, double theta_big) {
  if (!(ri > 0.0) || !(rj > 0.0))
    throw std::invalid_argument("radii must be positive");
  if (!(theta_big > 0.0) || !(theta_big < 3.141592653589793))
    throw std::invalid_argument("intersection angle must lie in (0, pi)");
}

// ln cosh x and ln sinh x, stable for large x.
double log_cosh(double x) { return x - kLn2 + std::log1p(std::exp(-2.0 * x)); }

double log_sinh(double x) {
  if (x > 30.0) return x - kLn2 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

// 2 sinh^2(x/2) = cosh x - 1, without cancellation near 0.
double coshm1(double x) {
  const double s = std::sinh(0.5 * x);
  return 2.0 * s * s;
}

struct HypPair {
  double log_cosh_l;
  double log_sinh_l;
  double theta;      // half angle at center i
  double log_sin;    // ln sin(theta)
};

// Hyperbolic cosine rule for the edge and the angle at center i. Moderate
// radii go through cosh l - 1 to keep short edges accurate; past e^30 the
// evaluation switches to log space so huge radii stay usable.
HypPair hyp_pair(double ri, double rj, double theta_big) {
  const double c = std::cos(theta_big);
  // cosh l = cosh ri cosh rj (1 + cos T tanh ri tanh rj); the bracket is
  // positive for T in (0, pi).
  const double bracket = 1.0 + c * std::tanh(ri) * std::tanh(rj);
  const double log_cosh_big = log_cosh(ri) + log_cosh(rj) + std::log(bracket);
  double log_cosh_l, log_sinh_l, cos_val;
  if (log_cosh_big > 30.0) {
    log_cosh_l = log_cosh_big;
    log_sinh_l = log_cosh_big;  // sinh l ~ cosh l at this size
    const double rest = std::exp(log_cosh(rj) - log_cosh_l - log_cosh(ri));
    cos_val = std::exp(log_cosh_l + log_cosh(ri) - log_sinh_l - log_sinh(ri)) *
              (1.0 - rest);
  } else {
    // delta = cosh l - 1
    const double delta = coshm1(ri) * std::cosh(rj) + coshm1(rj) +
                         std::sinh(ri) * std::sinh(rj) * c;
    if (!(delta > 0.0))
      throw std::domain_error("degenerate two-circle configuration");
    const double sinh_l = std::sqrt(delta * (2.0 + delta));
    log_cosh_l = std::log1p(delta);
    log_sinh_l = std::log(sinh_l);
    // cosh l cosh ri - cosh rj = delta cosh ri + (cosh ri - cosh rj)
    const double num = delta * std::cosh(ri) + (coshm1(ri) - coshm1(rj));
    cos_val = num / (sinh_l * std::sinh(ri));
  }
  // sin theta = sinh rj sin T / sinh l
  const double log_sin =
      log_sinh(rj) + std::log(std::sin(theta_big)) - log_sinh_l;
  const double theta = std::atan2(std::exp(log_sin), cos_val);
  return {log_cosh_l, log_sinh_l, theta, log_sin};
}

}  // namespace

double u_from_radius(Background bg, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  if (bg == Background::Euclidean) return std::log(r);
  // ln tanh(r/2) = log1p(-e^-r) - log1p(e^-r), exact to full relative
  // precision even when tanh(r/2) rounds to 1
  const double em = std::exp(-r);
  return std::log1p(-em) - std::log1p(em);
}

double radius_from_u(Background bg, double u) {
  if (bg == Background::Euclidean) return std::exp(u);
  if (!(u < 0.0))
    throw std::invalid_argument("hyperbolic u must be negative");
  // 2 atanh(e^u) = log1p(e^u) - ln(-expm1(u)), stable for u near 0
  return std::log1p(std::exp(u)) - std::log(-std::expm1(u));
}

double edge_length(Background bg, double ri, double rj, double theta_big) {
  check_args(ri, rj, theta_big);
  if (bg == Background::Euclidean) {
    const double m = std::fmax(ri, rj);
    const double a = ri / m, b = rj / m;
    return m * std::sqrt(a * a + b * b + 2.0 * a * b * std::cos(theta_big));
  }
  const HypPair p = hyp_pair(ri, rj, theta_big);
  if (p.log_sinh_l > 30.0) return p.log_sinh_l + kLn2;
  return std::asinh(std::exp(p.log_sinh_l));
}

double half_angle(Background bg, double ri, double rj, double theta_big) {
  check_args(ri, rj, theta_big);
  if (bg == Background::Euclidean) {
    if (ri == rj) return 0.5 * theta_big;
    const double m = std::fmax(ri, rj);
    const double a = ri / m, b = rj / m;
    return std::atan2(b * std::sin(theta_big), a + b * std::cos(theta_big));
  }
  return hyp_pair(ri, rj, theta_big).theta;
}

std::pair<double, double> d_half_angle_d_u(Background bg, double ri, double rj,
                                           double theta_big) {
  check_args(ri, rj, theta_big);
  if (bg == Background::Euclidean) {
    // d = ri sin theta, slope pair (-d/l, d/l); scale invariant.
    const double m = std::fmax(ri, rj);
    const double a = ri / m, b = rj / m;
    const double l = std::sqrt(a * a + b * b + 2.0 * a * b * std::cos(theta_big));
    const double theta = half_angle(bg, ri, rj, theta_big);
    const double dl = a * std::sin(theta) / l;
    return {-dl, dl};
  }
  const HypPair p = hyp_pair(ri, rj, theta_big);
  // sinh d = sinh ri sin theta
  const double log_sinh_d = log_sinh(ri) + p.log_sin;
  const double dj = std::exp(log_sinh_d - p.log_sinh_l);
  const double di = -std::exp(p.log_cosh_l + log_sinh_d - p.log_sinh_l);
  return {di, dj};
}

double equal_radius_half_angle_hyperbolic(double t, double theta_big) {
  check_args(t, t, theta_big);
  const double c = 1.0 + std::cos(theta_big);
  const double s = std::sin(theta_big);
  const double sh = std::sinh(t);
  const double s2 = s * s / (2.0 * c + c * c * sh * sh);
  return std::asin(std::sqrt(s2));
}

double half_angle_sup(double ri, double theta_big) {
  check_args(ri, ri, theta_big);
  // Limit rj -> inf of the hyperbolic half angle:
  //   sin = sin T / D,  cos = (cosh ri * D - 1) / (sinh ri * D),
  // with D = cosh ri + sinh ri cos T > 0.
  const double ch = std::cosh(ri), sh = std::sinh(ri);
  const double den = ch + sh * std::cos(theta_big);
  return std::atan2(std::sin(theta_big) * sh, ch * den - 1.0);
}

double theta_upper_bound_radius(double eps, double theta_big) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(theta_big > 0.0) || !(theta_big < 3.141592653589793))
    throw std::invalid_argument("intersection angle must lie in (0, pi)");
  if (eps >= theta_big) return 0.0;
  double hi = 1.0;
  while (half_angle_sup(hi, theta_big) >= eps) {
    hi *= 2.0;
    if (hi > 1e6) throw std::runtime_error("upper bound search diverged");
  }
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (half_angle_sup(mid, theta_big) >= eps)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

}  // namespace icp
