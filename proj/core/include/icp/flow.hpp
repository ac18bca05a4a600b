#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icp/complex.hpp"
#include "icp/curvature.hpp"

namespace icp {

enum class Scheme { Rk4Fixed, Rk45Adaptive };

struct FlowConfig {
  Background background = Background::Euclidean;
  std::vector<double> k_hat;     // empty = zero targets
  std::vector<char> free_mask;   // empty = interior vertices of the complex
  Scheme scheme = Scheme::Rk45Adaptive;
  double dt_init = 1e-2;
  double t_max = 1e4;
  double tol_K = 1e-8;           // stop when ||K - K_hat||_inf <= tol_K
  double step_tol = 1e-10;       // per-step error tolerance (adaptive);
                                 // keep well below tol_K, the step error
                                 // floors the reachable residual
  double u_cap = 700.0;          // abort when |u| exceeds this
  int snapshot_every = 0;        // 0 = first and last only
};

struct FlowTrace {
  // per accepted step
  std::vector<double> times;
  std::vector<double> residual;  // ||K - K_hat||_inf over free vertices
  std::vector<double> energy;    // Dirichlet energy of u over all edges
  std::vector<double> u_min, u_max;
  // decimated full snapshots
  std::vector<double> snapshot_times;
  std::vector<std::vector<double>> u_snapshots;
  std::vector<std::vector<double>> k_snapshots;

  std::vector<double> u_final, k_final;
  bool converged = false;
  double t_final = 0.0;
};

// du_i/dt = -(K_i - K_hat_i) on free vertices, 0 elsewhere.
std::vector<double> ricci_flow_rhs(const CellComplex& cc,
                                   const PackingMetric& m,
                                   const std::vector<double>& k_hat,
                                   const std::vector<char>& free_mask);

FlowTrace integrate(const CellComplex& cc, const PackingMetric& m0,
                    const FlowConfig& config);

// Constant hyperbolic metric u = u(t*) 1 with t* chosen by bisection on the
// equal-radius half angle so theta(t*,t*) >= Theta/2 - c_hat/2 per edge,
// which makes K <= 0 at all free vertices (asserted). Requires
// normalized_character >= c_hat > 0 on free vertices.
PackingMetric initial_metric_hyperbolic_character(const CellComplex& cc,
                                                 double c_hat,
                                                 std::vector<char> free_mask = {});

enum class FlowClass { Converged, Stalled, Diverged };

struct ReportOptions {
  double tol_K = 1e-8;
  // residual window for the exponential-rate fit
  double rate_fit_hi = 1e-2;
  double rate_fit_lo = 1e-8;
  // fraction of the ln(1+t) range used for the power-law fit (mid-trace)
  double power_lo_frac = 1.0 / 3.0;
  double power_hi_frac = 2.0 / 3.0;
};

struct ConvergenceReport {
  FlowClass classification;
  double final_residual;
  double gamma_hat;        // rate from ln residual ~ -gamma t (NaN if unfit)
  double power_exponent;   // slope of ln E vs ln(1+t) (NaN if unfit)
  int rate_samples = 0;
  int power_samples = 0;
};

ConvergenceReport convergence_report(const FlowTrace& trace,
                                     const ReportOptions& options = {});

std::string flow_class_name(FlowClass c);

}  // namespace icp
