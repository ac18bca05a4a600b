#pragma once

#include <functional>
#include <vector>

namespace icp {

using OdeRhs = std::function<void(double t, const std::vector<double>& y,
                                  std::vector<double>& dy)>;

struct OdeOptions {
  bool adaptive = true;     // embedded 4(5) pair; false = fixed-step RK4
  double dt_init = 1e-2;
  double t_end = 1.0;
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
  double dt_min = 1e-13;
  double dt_max = 1e6;
};

struct OdeCallbacks {
  // reject candidate states (step is halved); empty = accept all
  std::function<bool(const std::vector<double>&)> admissible;
  // called after each accepted step; return false to stop early
  std::function<bool(double t, const std::vector<double>& y)> on_accept;
};

void rk4_step(const OdeRhs& rhs, double t, const std::vector<double>& y,
              double dt, std::vector<double>& out);

// Integrates y from t0 to options.t_end (or until on_accept stops it).
// Returns the final time. Throws on step-size underflow or NaN.
double integrate_ode(const OdeRhs& rhs, std::vector<double>& y, double t0,
                     const OdeOptions& options,
                     const OdeCallbacks& callbacks = {});

}  // namespace icp
