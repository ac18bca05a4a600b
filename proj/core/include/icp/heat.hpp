#pragma once

#include <array>
#include <functional>
#include <vector>

#include "icp/ode.hpp"

namespace icp {

// Weighted graph for df/dt = Delta_omega f + g f, with
// Delta_omega f_i = sum_j omega_ij (f_j - f_i).
struct HeatGraph {
  int n_vertices = 0;
  std::vector<std::array<int, 2>> edges;
};

struct HeatTrace {
  std::vector<double> times;
  std::vector<std::vector<double>> f;
};

// omega(t) is per-edge (nonnegative, checked each evaluation), g(t) per
// vertex. Samples are recorded at every accepted step.
HeatTrace heat_equation_simulate(
    const HeatGraph& graph,
    const std::function<std::vector<double>(double)>& omega,
    const std::function<std::vector<double>(double)>& g,
    const std::vector<double>& f0, double horizon,
    const OdeOptions& options = {.adaptive = true,
                                 .dt_init = 1e-3,
                                 .abs_tol = 1e-10,
                                 .rel_tol = 1e-10});

// Convenience overload for time-independent coefficients.
HeatTrace heat_equation_simulate(const HeatGraph& graph,
                                 const std::vector<double>& omega,
                                 const std::vector<double>& g,
                                 const std::vector<double>& f0,
                                 double horizon);

}  // namespace icp
