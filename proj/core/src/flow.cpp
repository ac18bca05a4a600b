#include "icp/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "icp/ode.hpp"

namespace icp {

namespace {

std::vector<char> resolve_free_mask(const CellComplex& cc,
                                    const std::vector<char>& given) {
  if (!given.empty()) {
    if (static_cast<int>(given.size()) != cc.n_vertices())
      throw std::invalid_argument("free mask size mismatch");
    return given;
  }
  return cc.interior_mask();
}

double residual_norm(const std::vector<double>& K,
                     const std::vector<double>& k_hat,
                     const std::vector<char>& free_mask) {
  double r = 0.0;
  for (size_t v = 0; v < K.size(); ++v)
    if (free_mask[v])
      r = std::max(r, std::abs(K[v] - (k_hat.empty() ? 0.0 : k_hat[v])));
  return r;
}

}  // namespace

std::vector<double> ricci_flow_rhs(const CellComplex& cc,
                                   const PackingMetric& m,
                                   const std::vector<double>& k_hat,
                                   const std::vector<char>& free_mask) {
  if (!k_hat.empty() && static_cast<int>(k_hat.size()) != cc.n_vertices())
    throw std::invalid_argument("k_hat size mismatch");
  std::vector<double> du(cc.n_vertices(), 0.0);
  for (int v = 0; v < cc.n_vertices(); ++v)
    if (free_mask[v])
      du[v] = -(vertex_curvature(cc, m, v) - (k_hat.empty() ? 0.0 : k_hat[v]));
  return du;
}

FlowTrace integrate(const CellComplex& cc, const PackingMetric& m0,
                    const FlowConfig& config) {
  if (!(config.tol_K > 0.0) || !(config.dt_init > 0.0))
    throw std::invalid_argument("tol_K and dt_init must be positive");
  if (static_cast<int>(m0.u.size()) != cc.n_vertices())
    throw std::invalid_argument("metric size mismatch");
  const std::vector<char> free_mask = resolve_free_mask(cc, config.free_mask);
  const bool hyp = m0.background == Background::Hyperbolic;
  if (hyp)
    for (double u : m0.u)
      if (!(u < 0.0))
        throw std::invalid_argument("hyperbolic metric needs u < 0");

  std::vector<char> inf_mask(cc.n_vertices(), 0);
  for (int v : cc.infinity_vertices()) inf_mask[v] = 1;
  for (int v = 0; v < cc.n_vertices(); ++v)
    if (free_mask[v] && inf_mask[v])
      throw std::invalid_argument("infinity vertices cannot be free");

  FlowTrace trace;
  PackingMetric m = m0;

  auto record = [&](double t, const std::vector<double>& u, bool force_snap) {
    m.u = u;
    const std::vector<double> K = curvature_field(cc, m);
    const double res = residual_norm(K, config.k_hat, free_mask);
    trace.times.push_back(t);
    trace.residual.push_back(res);
    trace.energy.push_back(dirichlet_energy(cc, u));
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int v = 0; v < cc.n_vertices(); ++v)
      if (!inf_mask[v]) {
        lo = std::min(lo, u[v]);
        hi = std::max(hi, u[v]);
      }
    trace.u_min.push_back(lo);
    trace.u_max.push_back(hi);
    const bool snap =
        force_snap ||
        (config.snapshot_every > 0 &&
         static_cast<int>(trace.times.size()) % config.snapshot_every == 0);
    if (snap) {
      trace.snapshot_times.push_back(t);
      trace.u_snapshots.push_back(u);
      trace.k_snapshots.push_back(K);
    }
    trace.u_final = u;
    trace.k_final = K;
    return res;
  };

  double res0 = record(0.0, m0.u, true);
  if (res0 <= config.tol_K) {
    trace.converged = true;
    trace.t_final = 0.0;
    return trace;
  }

  OdeRhs rhs = [&](double, const std::vector<double>& u,
                   std::vector<double>& du) {
    m.u = u;
    du = ricci_flow_rhs(cc, m, config.k_hat, free_mask);
  };

  OdeOptions opt;
  opt.adaptive = config.scheme == Scheme::Rk45Adaptive;
  opt.dt_init = config.dt_init;
  opt.t_end = config.t_max;
  opt.abs_tol = config.step_tol;
  opt.rel_tol = config.step_tol;

  OdeCallbacks cb;
  cb.admissible = [&](const std::vector<double>& u) {
    for (int v = 0; v < cc.n_vertices(); ++v) {
      if (!free_mask[v]) continue;
      if (hyp && !(u[v] < 0.0)) return false;
      if (std::abs(u[v]) > config.u_cap) return false;
    }
    return true;
  };
  bool converged = false;
  cb.on_accept = [&](double t, const std::vector<double>& u) {
    trace.t_final = t;
    const double res = record(t, u, false);
    if (res <= config.tol_K) {
      converged = true;
      return false;
    }
    return true;
  };

  std::vector<double> y = m0.u;
  const double t_final = integrate_ode(rhs, y, 0.0, opt, cb);
  trace.t_final = t_final;
  trace.converged = converged;
  // frozen coordinates are bit-exact by construction of the rhs; make the
  // final snapshot reflect the last accepted state
  if (trace.snapshot_times.empty() ||
      trace.snapshot_times.back() != trace.times.back()) {
    trace.snapshot_times.push_back(trace.times.back());
    trace.u_snapshots.push_back(trace.u_final);
    trace.k_snapshots.push_back(trace.k_final);
  }
  return trace;
}

PackingMetric initial_metric_hyperbolic_character(const CellComplex& cc,
                                                 double c_hat,
                                                 std::vector<char> free_mask) {
  if (!(c_hat > 0.0)) throw std::invalid_argument("c_hat must be positive");
  const std::vector<char> mask = resolve_free_mask(cc, free_mask);

  std::vector<int> offending;
  for (int v = 0; v < cc.n_vertices(); ++v)
    if (mask[v] && cc.normalized_character(v) < c_hat) offending.push_back(v);
  if (!offending.empty()) {
    std::string msg = "normalized character below c_hat at vertices:";
    for (size_t i = 0; i < offending.size() && i < 8; ++i)
      msg += " " + std::to_string(offending[i]);
    throw std::invalid_argument(msg);
  }

  // theta(t,t) -> Theta/2 as t -> 0 and decreases in t; find t* with
  // theta(t*,t*) >= Theta/2 - c_hat/2 on every edge.
  const double slack = 0.5 * c_hat;
  auto admissible = [&](double t) {
    for (const auto& e : cc.edges) {
      const double th =
          equal_radius_half_angle_hyperbolic(t, e.theta);
      if (th < 0.5 * e.theta - slack) return false;
    }
    return true;
  };
  double hi = 1.0;
  while (!admissible(hi)) {
    hi *= 0.5;
    if (hi < 1e-300) throw std::runtime_error("bisection collapsed");
  }
  // grow while still admissible to return the largest workable radius
  double lo = hi;
  while (admissible(hi * 2.0) && hi < 1e6) hi *= 2.0;
  lo = hi;
  double bad = hi * 2.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + bad);
    if (admissible(mid))
      lo = mid;
    else
      bad = mid;
  }

  PackingMetric m =
      PackingMetric::constant(Background::Hyperbolic, cc.n_vertices(), lo);
  for (int v = 0; v < cc.n_vertices(); ++v)
    if (mask[v] && vertex_curvature(cc, m, v) > 1e-9)
      throw std::runtime_error(
          "constructed metric has positive curvature at vertex " +
          std::to_string(v));
  return m;
}

ConvergenceReport convergence_report(const FlowTrace& trace,
                                     const ReportOptions& opt) {
  const size_t n = trace.times.size();
  if (n < 10) throw std::invalid_argument("trace too short for a report");

  ConvergenceReport rep;
  rep.final_residual = trace.residual.back();
  if (rep.final_residual <= opt.tol_K)
    rep.classification = FlowClass::Converged;
  else if (trace.residual.back() >
           2.0 * *std::max_element(trace.residual.begin(),
                                   trace.residual.begin() + n / 2))
    rep.classification = FlowClass::Diverged;
  else
    rep.classification = FlowClass::Stalled;

  auto fit_line = [](const std::vector<double>& x,
                     const std::vector<double>& y) {
    const size_t m = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
      sx += x[i];
      sy += y[i];
      sxx += x[i] * x[i];
      sxy += x[i] * y[i];
    }
    const double det = m * sxx - sx * sx;
    return (m * sxy - sx * sy) / det;
  };

  std::vector<double> xs, ys;
  for (size_t i = 0; i < n; ++i) {
    const double r = trace.residual[i];
    if (r >= opt.rate_fit_lo && r <= opt.rate_fit_hi) {
      xs.push_back(trace.times[i]);
      ys.push_back(std::log(r));
    }
  }
  rep.rate_samples = static_cast<int>(xs.size());
  rep.gamma_hat =
      xs.size() >= 3 ? -fit_line(xs, ys) : std::nan("");

  xs.clear();
  ys.clear();
  const double l_lo = std::log1p(trace.times.front());
  const double l_hi = std::log1p(trace.times.back());
  const double w_lo = l_lo + opt.power_lo_frac * (l_hi - l_lo);
  const double w_hi = l_lo + opt.power_hi_frac * (l_hi - l_lo);
  for (size_t i = 0; i < n; ++i) {
    const double lx = std::log1p(trace.times[i]);
    if (lx >= w_lo && lx <= w_hi && trace.energy[i] > 0.0) {
      xs.push_back(lx);
      ys.push_back(std::log(trace.energy[i]));
    }
  }
  rep.power_samples = static_cast<int>(xs.size());
  rep.power_exponent = xs.size() >= 3 ? fit_line(xs, ys) : std::nan("");
  return rep;
}

std::string flow_class_name(FlowClass c) {
  switch (c) {
    case FlowClass::Converged: return "converged";
    case FlowClass::Stalled: return "stalled";
    case FlowClass::Diverged: return "diverged";
  }
  return "unknown";
}

}  // namespace icp
