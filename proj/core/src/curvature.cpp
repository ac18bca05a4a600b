#include "icp/curvature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace icp {

namespace {

std::vector<char> infinity_mask(const CellComplex& cc) {
  std::vector<char> mask(cc.n_vertices(), 0);
  for (int v : cc.infinity_vertices()) mask[v] = 1;
  return mask;
}

void check_metric(const CellComplex& cc, const PackingMetric& m) {
  if (static_cast<int>(m.u.size()) != cc.n_vertices())
    throw std::invalid_argument("metric size does not match complex");
}

}  // namespace

PackingMetric PackingMetric::constant(Background bg, int n, double radius) {
  PackingMetric m;
  m.background = bg;
  m.u.assign(n, u_from_radius(bg, radius));
  return m;
}

int edge_multiplicity(const CellComplex& cc, int e) {
  int mult = 0;
  for (int f : cc.edge_faces[e])
    if (f != -1 && f != cc.infinity_face) ++mult;
  return mult;
}

double vertex_curvature(const CellComplex& cc, const PackingMetric& m,
                        int v) {
  check_metric(cc, m);
  const auto inf = infinity_mask(cc);
  if (v < 0 || v >= cc.n_vertices())
    throw std::invalid_argument("vertex out of range");
  if (inf[v])
    throw std::invalid_argument("curvature undefined on the infinity set");
  const double rv = m.r(v);
  double cone = 0.0;
  for (int e : cc.vertex_edges[v]) {
    const int j = cc.other_endpoint(e, v);
    if (inf[j]) continue;
    if (std::isnan(m.u[j]))
      throw std::invalid_argument("missing metric value at neighbor " +
                                  std::to_string(j));
    const int mult = edge_multiplicity(cc, e);
    if (mult == 0) continue;
    cone += mult * half_angle(m.background, rv, m.r(j), cc.edges[e].theta);
  }
  return 2.0 * std::numbers::pi - cone;
}

std::vector<double> curvature_field(const CellComplex& cc,
                                    const PackingMetric& m) {
  const auto inf = infinity_mask(cc);
  std::vector<double> K(cc.n_vertices(), 0.0);
  for (int v = 0; v < cc.n_vertices(); ++v)
    if (!inf[v]) K[v] = vertex_curvature(cc, m, v);
  return K;
}

std::vector<double> prescribed_curvature_hat(const CellComplex& cc) {
  const auto vs = cc.infinity_vertices();
  if (vs.empty())
    throw std::invalid_argument("prescribed curvature needs infinity marks");
  const auto inf = infinity_mask(cc);
  std::vector<double> k_hat(cc.n_vertices(), 0.0);
  for (int v = 0; v < cc.n_vertices(); ++v) {
    if (inf[v]) continue;
    for (int e : cc.vertex_edges[v])
      if (inf[cc.other_endpoint(e, v)]) k_hat[v] += 2.0 * cc.edges[e].theta;
  }
  return k_hat;
}

double dual_face_curvature(const CellComplex& cc,
                           const std::vector<double>& face_r, int f) {
  if (f < 0 || f >= cc.n_faces())
    throw std::invalid_argument("face out of range");
  if (static_cast<int>(face_r.size()) != cc.n_faces())
    throw std::invalid_argument("face radii size mismatch");
  const auto inf = infinity_mask(cc);
  // F_inf: faces incident to the infinity vertex set
  std::vector<char> f_inf(cc.n_faces(), 0);
  for (int g = 0; g < cc.n_faces(); ++g)
    for (int v : cc.face_vertices[g])
      if (inf[v]) f_inf[g] = 1;
  if (f_inf[f])
    throw std::invalid_argument("face lies in the infinity face set");
  // boundary of F \ F_inf: faces adjacent to F_inf across an edge
  auto is_boundary = [&](int g) {
    for (int e : cc.faces[g]) {
      const auto& ff = cc.edge_faces[e];
      const int other = ff[0] == g ? ff[1] : ff[0];
      if (other != -1 && f_inf[other]) return true;
    }
    return false;
  };
  const bool f_bd = is_boundary(f);
  const double rf = face_r[f];
  if (!(rf > 0.0)) throw std::invalid_argument("face radius must be positive");

  double K = 0.0;
  for (int e : cc.faces[f]) {
    const auto& ff = cc.edge_faces[e];
    const int g = ff[0] == f ? ff[1] : ff[0];
    if (g == -1 || f_inf[g]) continue;
    const double rg = face_r[g];
    if (!(rg > 0.0))
      throw std::invalid_argument("face radius must be positive");
    const double th = cc.edges[e].theta;
    const double alpha = (f_bd && is_boundary(g)) ? 1.0 : 2.0;
    const double chord =
        std::sqrt(rf * rf + rg * rg - 2.0 * std::cos(th) * rf * rg);
    K += alpha * std::asin(rg * std::sin(th) / chord);
  }
  return 2.0 * std::numbers::pi - K;
}

JacobianWeights flow_jacobian_weights(const CellComplex& cc,
                                      const PackingMetric& m) {
  check_metric(cc, m);
  const auto inf = infinity_mask(cc);
  JacobianWeights w;
  w.omega.assign(cc.n_edges(), 0.0);
  w.g.assign(cc.n_vertices(), 0.0);
  for (int e = 0; e < cc.n_edges(); ++e) {
    const int i = cc.edges[e].u, j = cc.edges[e].v;
    if (inf[i] || inf[j]) continue;
    const int mult = edge_multiplicity(cc, e);
    if (mult == 0) continue;
    const auto [dii, dij] =
        d_half_angle_d_u(m.background, m.r(i), m.r(j), cc.edges[e].theta);
    // omega_e = -dK_i/du_j = mult * dtheta_ij/du_j; symmetric across the edge
    w.omega[e] = mult * dij;
    w.g[i] += mult * (dii + dij);
    w.g[j] += mult * (dii + dij);  // same value by the cross-derivative symmetry
  }
  return w;
}

double dirichlet_energy(const CellComplex& cc, const std::vector<double>& u) {
  double s = 0.0;
  for (const auto& e : cc.edges) {
    const double d = u[e.u] - u[e.v];
    s += d * d;
  }
  return s;
}

CellComplex supplement_weights(const CellComplex& cc) {
  CellComplex out = cc;
  for (auto& e : out.edges) e.theta = std::numbers::pi - e.theta;
  return out;
}

}  // namespace icp
