#include "icp/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icp {

namespace {

bool has_nan(const std::vector<double>& y) {
  for (double v : y)
    if (!std::isfinite(v)) return true;
  return false;
}

// Dormand-Prince 5(4) tableau
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                 a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                 e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640,
                 e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

}  // namespace

void rk4_step(const OdeRhs& rhs, double t, const std::vector<double>& y,
              double dt, std::vector<double>& out) {
  const size_t n = y.size();
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  rhs(t, y, k1);
  for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
  rhs(t + 0.5 * dt, tmp, k2);
  for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
  rhs(t + 0.5 * dt, tmp, k3);
  for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * k3[i];
  rhs(t + dt, tmp, k4);
  out.resize(n);
  for (size_t i = 0; i < n; ++i)
    out[i] = y[i] + dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
}

double integrate_ode(const OdeRhs& rhs, std::vector<double>& y, double t0,
                     const OdeOptions& opt, const OdeCallbacks& cb) {
  if (!(opt.dt_init > 0.0) || !(opt.t_end > t0))
    throw std::invalid_argument("bad integration window or step");
  const size_t n = y.size();
  double t = t0;
  double dt = std::min(opt.dt_init, opt.t_end - t0);

  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n),
      tmp(n), ynew(n);

  while (t < opt.t_end) {
    dt = std::min(dt, opt.t_end - t);
    if (dt < opt.dt_min) throw std::runtime_error("step size underflow");

    bool accept;
    if (opt.adaptive) {
      rhs(t, y, k1);
      for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * a21 * k1[i];
      rhs(t + dt / 5, tmp, k2);
      for (size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + dt * (a31 * k1[i] + a32 * k2[i]);
      rhs(t + 3 * dt / 10, tmp, k3);
      for (size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + dt * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
      rhs(t + 4 * dt / 5, tmp, k4);
      for (size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + dt * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                              a54 * k4[i]);
      rhs(t + 8 * dt / 9, tmp, k5);
      for (size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + dt * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                              a64 * k4[i] + a65 * k5[i]);
      rhs(t + dt, tmp, k6);
      for (size_t i = 0; i < n; ++i)
        ynew[i] = y[i] + dt * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                               b5 * k5[i] + b6 * k6[i]);
      rhs(t + dt, ynew, k7);

      double err = 0.0;
      for (size_t i = 0; i < n; ++i) {
        const double ei = dt * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double sc =
            opt.abs_tol +
            opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        const double q = std::abs(ei) / sc;
        // NaN must force rejection; max() would silently drop it
        err = std::isfinite(q)
                  ? std::max(err, q)
                  : std::numeric_limits<double>::infinity();
      }
      if (has_nan(ynew)) err = std::numeric_limits<double>::infinity();
      accept = err <= 1.0;
      if (accept && cb.admissible && !cb.admissible(ynew)) {
        dt *= 0.5;
        continue;
      }
      double grow = 0.2;
      if (std::isfinite(err)) grow = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
      const double next_dt = dt * std::clamp(grow, 0.2, 5.0);
      if (!accept) {
        dt = next_dt;
        continue;
      }
      y.swap(ynew);
      t += dt;
      dt = std::min(next_dt, opt.dt_max);
    } else {
      rk4_step(rhs, t, y, dt, ynew);
      if (has_nan(ynew)) throw std::runtime_error("NaN during integration");
      if (cb.admissible && !cb.admissible(ynew)) {
        dt *= 0.5;
        continue;
      }
      y.swap(ynew);
      t += dt;
      dt = std::min(opt.dt_init, opt.dt_max);
    }
    if (cb.on_accept && !cb.on_accept(t, y)) break;
  }
  return t;
}

}  // namespace icp
