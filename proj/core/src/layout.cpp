#include "icp/layout.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace icp {

namespace {

using Pt = std::complex<double>;

Pt unit(Pt z) {
  const double a = std::abs(z);
  if (!(a > 0.0)) throw std::runtime_error("degenerate direction in layout");
  return z / a;
}

Pt rot(Pt z, double phi) { return z * std::polar(1.0, phi); }

// Poincare disk helpers. mob_to_origin(y) sends y to 0.
Pt mob_to_origin(Pt y, Pt w) { return (w - y) / (1.0 - std::conj(y) * w); }
Pt mob_from_origin(Pt y, Pt z) { return (z + y) / (1.0 + std::conj(y) * z); }

double disk_distance(Pt z, Pt w) {
  return 2.0 * std::atanh(std::abs(z - w) / std::abs(1.0 - std::conj(z) * w));
}

// Point at hyperbolic distance d from y, in the direction obtained by
// rotating the geodesic y -> z by phi.
Pt disk_step(Pt y, Pt z, double d, double phi) {
  const Pt dir = rot(unit(mob_to_origin(y, z)), phi);
  return mob_from_origin(y, std::tanh(0.5 * d) * dir);
}

Pt plane_step(Pt y, Pt z, double d, double phi) {
  return y + d * rot(unit(z - y), phi);
}

struct Tri {
  int i, j, f;        // vertex, vertex, star node = n + face
  double li, lj, le;  // sides (i, star), (j, star), (i, j)
  double ai, aj;      // angles at i and j
  bool rim;
  bool done = false;
};

}  // namespace

PatternLayout embed(const CellComplex& cc, const PackingMetric& m,
                    int seed_face) {
  if (static_cast<int>(m.u.size()) != cc.n_vertices())
    throw std::invalid_argument("metric size mismatch");
  const bool disk = m.background == Background::Hyperbolic;
  const int n = cc.n_vertices();

  std::vector<char> inf_mask(n, 0);
  for (int v : cc.infinity_vertices()) inf_mask[v] = 1;
  const std::vector<char> interior = cc.interior_mask();

  std::vector<Tri> tris;
  std::vector<std::vector<int>> node_tris(n + cc.n_faces());
  int first_face = -1;
  for (int f = 0; f < cc.n_faces(); ++f) {
    if (f == cc.infinity_face) continue;
    bool touches_inf = false;
    for (int v : cc.face_vertices[f]) touches_inf |= inf_mask[v] != 0;
    if (touches_inf) continue;
    if (first_face < 0) first_face = f;
    const auto& cyc = cc.face_vertices[f];
    const int msz = static_cast<int>(cyc.size());
    for (int k = 0; k < msz; ++k) {
      Tri t;
      t.i = cyc[k];
      t.j = cyc[(k + 1) % msz];
      t.f = n + f;
      const double ri = m.r(t.i), rj = m.r(t.j);
      const double theta = cc.edges[cc.faces[f][k]].theta;
      t.li = ri;
      t.lj = rj;
      t.le = edge_length(m.background, ri, rj, theta);
      t.ai = half_angle(m.background, ri, rj, theta);
      t.aj = half_angle(m.background, rj, ri, theta);
      t.rim = !interior[t.i] || !interior[t.j];
      const int idx = static_cast<int>(tris.size());
      tris.push_back(t);
      node_tris[t.i].push_back(idx);
      node_tris[t.j].push_back(idx);
      node_tris[t.f].push_back(idx);
    }
  }

  PatternLayout out;
  out.ambient = disk ? Ambient::Disk : Ambient::Plane;
  out.circles.resize(n);
  for (int v = 0; v < n; ++v) out.circles[v].v = v;
  out.stars.resize(cc.n_faces());
  for (int f = 0; f < cc.n_faces(); ++f) out.stars[f].face = f;
  if (tris.empty()) return out;

  if (seed_face < 0) seed_face = first_face;
  if (seed_face == cc.infinity_face || seed_face >= cc.n_faces() ||
      node_tris[n + seed_face].empty())
    throw std::invalid_argument("seed face not eligible for layout");

  std::vector<Pt> pos(n + cc.n_faces());
  std::vector<char> placed(n + cc.n_faces(), 0);

  auto step = [&](Pt y, Pt z, double d, double phi) {
    return disk ? disk_step(y, z, d, phi) : plane_step(y, z, d, phi);
  };
  auto dist = [&](Pt z, Pt w) {
    return disk ? disk_distance(z, w) : std::abs(z - w);
  };

  std::deque<int> queue;
  auto mark_placed = [&](int node, Pt p) {
    pos[node] = p;
    placed[node] = 1;
    for (int t : node_tris[node]) queue.push_back(t);
  };

  {
    const Tri& s = tris[node_tris[n + seed_face].front()];
    mark_placed(s.i, Pt(0, 0));
    mark_placed(s.j, disk ? Pt(std::tanh(0.5 * s.le), 0) : Pt(s.le, 0));
  }

  auto note_misclosure = [&](const Tri& t, int face_idx) {
    const double err = std::max(
        {std::abs(dist(pos[t.i], pos[t.j]) - t.le),
         std::abs(dist(pos[t.i], pos[t.f]) - t.li),
         std::abs(dist(pos[t.j], pos[t.f]) - t.lj)});
    if (t.rim) {
      out.misclosure_rim = std::max(out.misclosure_rim, err);
    } else if (err > out.misclosure_interior) {
      out.misclosure_interior = err;
      out.worst_face = face_idx;
    }
  };

  while (!queue.empty()) {
    const int ti = queue.front();
    queue.pop_front();
    Tri& t = tris[ti];
    if (t.done) continue;
    const int np = placed[t.i] + placed[t.j] + placed[t.f];
    if (np < 2) continue;
    if (np == 3) {
      t.done = true;
      note_misclosure(t, t.f - n);
      continue;
    }
    // triangles are oriented (i, j, star) counterclockwise
    if (!placed[t.f])
      mark_placed(t.f, step(pos[t.i], pos[t.j], t.li, t.ai));
    else if (!placed[t.j])
      mark_placed(t.j, step(pos[t.i], pos[t.f], t.le, -t.ai));
    else
      mark_placed(t.i, step(pos[t.j], pos[t.f], t.le, t.aj));
    t.done = true;
  }

  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (int v = 0; v < n; ++v) {
    if (!placed[v]) continue;
    LayoutCircle& c = out.circles[v];
    c.placed = true;
    const Pt p = pos[v];
    const double rv = m.r(v);
    if (!disk) {
      c.cx = p.real();
      c.cy = p.imag();
      c.r = rv;
    } else {
      c.hx = p.real();
      c.hy = p.imag();
      c.hr = rv;
      // Euclidean circle representing the hyperbolic one: intersect with
      // the radial geodesic through the center
      const double d = 2.0 * std::atanh(std::abs(p));
      const Pt dir = std::abs(p) > 0.0 ? unit(p) : Pt(1, 0);
      const double a = std::tanh(0.5 * (d + rv));
      const double b = std::tanh(0.5 * (d - rv));
      const Pt ec = 0.5 * (a + b) * dir;
      c.cx = ec.real();
      c.cy = ec.imag();
      c.r = 0.5 * (a - b);
    }
    xlo = std::min(xlo, c.cx);
    xhi = std::max(xhi, c.cx);
    ylo = std::min(ylo, c.cy);
    yhi = std::max(yhi, c.cy);
  }
  for (int f = 0; f < cc.n_faces(); ++f)
    if (placed[n + f]) {
      out.stars[f].placed = true;
      out.stars[f].x = pos[n + f].real();
      out.stars[f].y = pos[n + f].imag();
    }
  if (xhi >= xlo) out.diameter = std::hypot(xhi - xlo, yhi - ylo);
  return out;
}

double realized_intersection_angle(const LayoutCircle& a,
                                   const LayoutCircle& b) {
  const double d2 = (a.cx - b.cx) * (a.cx - b.cx) +
                    (a.cy - b.cy) * (a.cy - b.cy);
  const double c = (d2 - a.r * a.r - b.r * b.r) / (2.0 * a.r * b.r);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

std::vector<double> realized_angle_sums(const CellComplex& cc,
                                        const PatternLayout& layout) {
  const int n = cc.n_vertices();
  const bool disk = layout.ambient == Ambient::Disk;
  std::vector<double> sums(n, 0.0);
  std::vector<char> valid(n, 1);

  auto corner = [&](Pt at, Pt p, Pt q) {
    if (disk) {
      p = mob_to_origin(at, p);
      q = mob_to_origin(at, q);
    } else {
      p -= at;
      q -= at;
    }
    double a = std::arg(q) - std::arg(p);
    a = std::remainder(a, 2.0 * std::numbers::pi);
    return std::abs(a);
  };

  auto vpos = [&](int v) {
    const LayoutCircle& c = layout.circles[v];
    return disk ? Pt(c.hx, c.hy) : Pt(c.cx, c.cy);
  };

  for (int f = 0; f < cc.n_faces(); ++f) {
    if (f == cc.infinity_face || !layout.stars[f].placed) continue;
    const Pt sp(layout.stars[f].x, layout.stars[f].y);
    const auto& cyc = cc.face_vertices[f];
    const int msz = static_cast<int>(cyc.size());
    for (int k = 0; k < msz; ++k) {
      const int i = cyc[k], j = cyc[(k + 1) % msz];
      if (!layout.circles[i].placed || !layout.circles[j].placed) {
        valid[i] = valid[j] = 0;
        continue;
      }
      sums[i] += corner(vpos(i), vpos(j), sp);
      sums[j] += corner(vpos(j), vpos(i), sp);
    }
  }
  for (int v = 0; v < n; ++v)
    if (!valid[v] || !layout.circles[v].placed)
      sums[v] = std::nan("");
  return sums;
}

RigidMotion best_rigid_alignment(const std::vector<std::array<double, 2>>& a,
                                 const std::vector<std::array<double, 2>>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("alignment needs matched nonempty point sets");
  const double inv = 1.0 / static_cast<double>(a.size());
  double cax = 0, cay = 0, cbx = 0, cby = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    cax += a[k][0] * inv;
    cay += a[k][1] * inv;
    cbx += b[k][0] * inv;
    cby += b[k][1] * inv;
  }
  double sxx = 0, sxy = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    const double ax = a[k][0] - cax, ay = a[k][1] - cay;
    const double bx = b[k][0] - cbx, by = b[k][1] - cby;
    sxx += ax * bx + ay * by;
    sxy += ax * by - ay * bx;
  }
  RigidMotion rm;
  const double phi = std::atan2(sxy, sxx);
  rm.c = std::cos(phi);
  rm.s = std::sin(phi);
  rm.tx = cbx - (rm.c * cax - rm.s * cay);
  rm.ty = cby - (rm.s * cax + rm.c * cay);
  return rm;
}

double rms_after_alignment(const std::vector<std::array<double, 2>>& a,
                           const std::vector<std::array<double, 2>>& b) {
  const RigidMotion rm = best_rigid_alignment(a, b);
  double acc = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    const auto p = rm.apply(a[k][0], a[k][1]);
    const double dx = p[0] - b[k][0], dy = p[1] - b[k][1];
    acc += dx * dx + dy * dy;
  }
  return std::sqrt(acc / static_cast<double>(a.size()));
}

}  // namespace icp
