#include "icp/heat.hpp"

#include <stdexcept>

namespace icp {

HeatTrace heat_equation_simulate(
    const HeatGraph& graph,
    const std::function<std::vector<double>(double)>& omega,
    const std::function<std::vector<double>(double)>& g,
    const std::vector<double>& f0, double horizon, const OdeOptions& options) {
  const int n = graph.n_vertices;
  if (static_cast<int>(f0.size()) != n)
    throw std::invalid_argument("initial data size mismatch");
  for (const auto& e : graph.edges)
    if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n || e[0] == e[1])
      throw std::invalid_argument("bad edge");

  OdeRhs rhs = [&](double t, const std::vector<double>& f,
                   std::vector<double>& df) {
    const std::vector<double> w = omega(t);
    const std::vector<double> gv = g(t);
    if (w.size() != graph.edges.size() || static_cast<int>(gv.size()) != n)
      throw std::invalid_argument("coefficient size mismatch");
    df.assign(n, 0.0);
    for (size_t e = 0; e < graph.edges.size(); ++e) {
      if (!(w[e] >= 0.0))
        throw std::invalid_argument("negative edge weight");
      const auto [i, j] = graph.edges[e];
      const double flux = w[e] * (f[j] - f[i]);
      df[i] += flux;
      df[j] -= flux;
    }
    for (int i = 0; i < n; ++i) df[i] += gv[i] * f[i];
  };

  HeatTrace trace;
  trace.times.push_back(0.0);
  trace.f.push_back(f0);
  std::vector<double> y = f0;
  OdeOptions opt = options;
  opt.t_end = horizon;
  OdeCallbacks cb;
  cb.on_accept = [&](double t, const std::vector<double>& f) {
    trace.times.push_back(t);
    trace.f.push_back(f);
    return true;
  };
  integrate_ode(rhs, y, 0.0, opt, cb);
  return trace;
}

HeatTrace heat_equation_simulate(const HeatGraph& graph,
                                 const std::vector<double>& omega,
                                 const std::vector<double>& g,
                                 const std::vector<double>& f0,
                                 double horizon) {
  return heat_equation_simulate(
      graph, [&](double) { return omega; }, [&](double) { return g; }, f0,
      horizon);
}

}  // namespace icp
