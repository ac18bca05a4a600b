#include "icp/complex.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <numbers>
#include <stdexcept>

namespace icp {

namespace {

int shared_vertex(const EdgeRec& a, const EdgeRec& b) {
  int hit = -1, count = 0;
  for (int x : {a.u, a.v})
    for (int y : {b.u, b.v})
      if (x == y) {
        hit = x;
        ++count;
      }
  if (count != 1) return -1;
  return hit;
}

}  // namespace

void CellComplex::finalize() {
  const int nv = n_vertices();
  vertex_edges.assign(nv, {});
  edge_faces.assign(edges.size(), {-1, -1});
  face_vertices.assign(faces.size(), {});

  for (int e = 0; e < n_edges(); ++e) {
    const EdgeRec& r = edges[e];
    if (r.u < 0 || r.u >= nv || r.v < 0 || r.v >= nv || r.u == r.v)
      throw std::runtime_error("edge " + std::to_string(e) +
                               " has bad endpoints");
    vertex_edges[r.u].push_back(e);
    vertex_edges[r.v].push_back(e);
  }

  for (int f = 0; f < n_faces(); ++f) {
    const auto& fe = faces[f];
    const int m = static_cast<int>(fe.size());
    if (m < 3)
      throw std::runtime_error("face " + std::to_string(f) +
                               " has fewer than 3 edges");
    for (int e : fe) {
      if (e < 0 || e >= n_edges())
        throw std::runtime_error("face " + std::to_string(f) +
                                 " references missing edge");
      auto& slots = edge_faces[e];
      if (slots[0] == -1)
        slots[0] = f;
      else if (slots[1] == -1)
        slots[1] = f;
      else
        throw std::runtime_error("edge " + std::to_string(e) +
                                 " borders more than two faces");
    }
    // chain the edge list into a vertex cycle
    std::vector<int> cyc(m);
    const int pivot = shared_vertex(edges[fe[0]], edges[fe[1]]);
    if (pivot == -1)
      throw std::runtime_error("face " + std::to_string(f) +
                               " edges do not chain");
    cyc[0] = edges[fe[0]].u == pivot ? edges[fe[0]].v : edges[fe[0]].u;
    cyc[1] = pivot;
    for (int k = 1; k < m; ++k) {
      const int vk = cyc[k];
      const EdgeRec& r = edges[fe[k]];
      if (r.u != vk && r.v != vk)
        throw std::runtime_error("face " + std::to_string(f) +
                                 " edges do not chain");
      const int nxt = other_endpoint(fe[k], vk);
      if (k + 1 < m)
        cyc[k + 1] = nxt;
      else if (nxt != cyc[0])
        throw std::runtime_error("face " + std::to_string(f) +
                                 " does not close");
    }
    face_vertices[f] = std::move(cyc);
  }

  if (infinity_face != -1 &&
      (infinity_face < 0 || infinity_face >= n_faces()))
    throw std::runtime_error("infinity face out of range");
}

int CellComplex::other_endpoint(int e, int v) const {
  const EdgeRec& r = edges[e];
  if (r.u == v) return r.v;
  if (r.v == v) return r.u;
  throw std::logic_error("vertex not on edge");
}

std::vector<int> CellComplex::infinity_vertices() const {
  std::vector<int> vs = infinity_marks;
  if (infinity_face != -1)
    vs.insert(vs.end(), face_vertices[infinity_face].begin(),
              face_vertices[infinity_face].end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<char> CellComplex::interior_mask() const {
  const int nv = n_vertices();
  std::vector<int> face_count(nv, 0);
  for (int f = 0; f < n_faces(); ++f)
    for (int v : face_vertices[f]) ++face_count[v];
  std::vector<char> touches_inf(nv, 0);
  for (int v : infinity_vertices()) touches_inf[v] = 1;

  std::vector<char> mask(nv, 0);
  for (int v = 0; v < nv; ++v) {
    if (vertex_edges[v].empty() || touches_inf[v]) continue;
    bool ok = face_count[v] == degree(v);
    for (int e : vertex_edges[v])
      if (edge_faces[e][1] == -1) ok = false;
    mask[v] = ok ? 1 : 0;
  }
  return mask;
}

double CellComplex::character(int v) const {
  double s = 0.0;
  for (int e : vertex_edges[v]) s += edges[e].theta;
  return s;
}

double CellComplex::normalized_character(int v) const {
  if (vertex_edges[v].empty())
    throw std::invalid_argument("isolated vertex has no character");
  return (character(v) - 2.0 * std::numbers::pi) / degree(v);
}

std::vector<FaceDeficit> validate_c1(const CellComplex& cc, double tau) {
  for (int e = 0; e < cc.n_edges(); ++e) {
    const double t = cc.edges[e].theta;
    if (!(t > 0.0) || !(t < std::numbers::pi))
      throw std::runtime_error("edge " + std::to_string(e) +
                               " weight outside (0, pi)");
  }
  std::vector<FaceDeficit> out;
  for (int f = 0; f < cc.n_faces(); ++f) {
    const int m = static_cast<int>(cc.faces[f].size());
    double s = 0.0;
    for (int e : cc.faces[f]) s += cc.edges[e].theta;
    const double deficit = s - (m - 2) * std::numbers::pi;
    if (std::abs(deficit) > tau) out.push_back({f, deficit});
  }
  return out;
}

std::vector<int> hop_distances(const CellComplex& cc, int center) {
  if (center < 0 || center >= cc.n_vertices())
    throw std::invalid_argument("center out of range");
  std::vector<int> dist(cc.n_vertices(), -1);
  std::deque<int> q{center};
  dist[center] = 0;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int e : cc.vertex_edges[v]) {
      const int w = cc.other_endpoint(e, v);
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> build_exhaustion(const CellComplex& cc,
                                               int center,
                                               const std::vector<int>& radii) {
  for (size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1])
      throw std::invalid_argument("radii must be strictly increasing");
  const std::vector<int> dist = hop_distances(cc, center);
  std::vector<std::vector<int>> levels;
  for (int r : radii) {
    std::vector<int> ball;
    for (int v = 0; v < cc.n_vertices(); ++v)
      if (dist[v] != -1 && dist[v] <= r) ball.push_back(v);
    levels.push_back(std::move(ball));
  }
  return levels;
}

namespace {

// Cyclic order of the edges incident to v, obtained by pivoting through the
// incident faces. Requires a closed fan at v.
std::vector<int> rotation_at_vertex(const CellComplex& cc, int v) {
  const auto& inc = cc.vertex_edges[v];
  const int d = static_cast<int>(inc.size());
  std::vector<int> cycle;
  int e = inc[0];
  int f = cc.edge_faces[e][0];
  for (int step = 0; step < d; ++step) {
    cycle.push_back(e);
    // the other edge of f at v
    int next_e = -1;
    for (int cand : cc.faces[f])
      if (cand != e &&
          (cc.edges[cand].u == v || cc.edges[cand].v == v)) {
        next_e = cand;
        break;
      }
    if (next_e == -1)
      throw std::runtime_error("vertex fan broken at vertex " +
                               std::to_string(v));
    const auto& ff = cc.edge_faces[next_e];
    const int next_f = ff[0] == f ? ff[1] : ff[0];
    if (next_f == -1)
      throw std::runtime_error("complex is not closed at vertex " +
                               std::to_string(v));
    e = next_e;
    f = next_f;
  }
  if (e != inc[0] || static_cast<int>(cycle.size()) != d)
    throw std::runtime_error("vertex fan does not close at vertex " +
                             std::to_string(v));
  return cycle;
}

}  // namespace

CellComplex dual_complex(const CellComplex& cc) {
  for (int e = 0; e < cc.n_edges(); ++e)
    if (cc.edge_faces[e][1] == -1)
      throw std::invalid_argument("dual requires a closed complex");

  CellComplex d;
  d.labels.resize(cc.n_faces());
  for (int f = 0; f < cc.n_faces(); ++f) d.labels[f] = f;
  d.edges.resize(cc.n_edges());
  for (int e = 0; e < cc.n_edges(); ++e)
    d.edges[e] = {cc.edge_faces[e][0], cc.edge_faces[e][1],
                  cc.edges[e].theta};
  d.faces.resize(cc.n_vertices());
  for (int v = 0; v < cc.n_vertices(); ++v)
    d.faces[v] = rotation_at_vertex(cc, v);
  d.finalize();
  return d;
}

std::vector<std::vector<int>> oriented_face_cycles(const CellComplex& cc) {
  const int nf = cc.n_faces();
  // direction of edge e inside face f: +1 if traversed u->v
  auto edge_dir = [&](int f, int e) {
    const auto& cyc = cc.face_vertices[f];
    const auto& fe = cc.faces[f];
    for (size_t k = 0; k < fe.size(); ++k)
      if (fe[k] == e)
        return cyc[k] == cc.edges[e].u ? +1 : -1;
    throw std::logic_error("edge not in face");
  };

  std::vector<int> flip(nf, -2);  // -2 unseen, else 0/1
  for (int seed = 0; seed < nf; ++seed) {
    if (flip[seed] != -2) continue;
    flip[seed] = 0;
    std::deque<int> q{seed};
    while (!q.empty()) {
      const int f = q.front();
      q.pop_front();
      for (int e : cc.faces[f]) {
        const auto& ff = cc.edge_faces[e];
        const int g = ff[0] == f ? ff[1] : ff[0];
        if (g == -1) continue;
        const int want =
            edge_dir(f, e) == edge_dir(g, e) ? 1 - flip[f] : flip[f];
        if (flip[g] == -2) {
          flip[g] = want;
          q.push_back(g);
        } else if (flip[g] != want) {
          throw std::runtime_error("complex is not orientable");
        }
      }
    }
  }

  std::vector<std::vector<int>> out(nf);
  for (int f = 0; f < nf; ++f) {
    out[f] = cc.face_vertices[f];
    if (flip[f] == 1) {
      std::reverse(out[f].begin(), out[f].end());
      std::rotate(out[f].rbegin(), out[f].rbegin() + 1, out[f].rend());
    }
  }
  return out;
}

ComplexStats complex_stats(const CellComplex& cc) {
  ComplexStats s;
  s.n_vertices = cc.n_vertices();
  s.n_edges = cc.n_edges();
  s.n_faces = cc.n_faces();
  for (int v = 0; v < cc.n_vertices(); ++v)
    s.degrees.push_back(cc.degree(v));
  for (const auto& f : cc.faces)
    s.face_sizes.push_back(static_cast<int>(f.size()));
  for (const auto& e : cc.edges) s.thetas.push_back(e.theta);
  std::sort(s.degrees.begin(), s.degrees.end());
  std::sort(s.face_sizes.begin(), s.face_sizes.end());
  std::sort(s.thetas.begin(), s.thetas.end());
  return s;
}

std::uint64_t complex_hash(const CellComplex& cc) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const void* p, size_t n) {
    const unsigned char* b = static_cast<const unsigned char*>(p);
    for (size_t i = 0; i < n; ++i) {
      h ^= b[i];
      h *= 1099511628211ull;
    }
  };
  auto mix_i64 = [&](std::int64_t x) { mix(&x, sizeof x); };
  auto mix_f64 = [&](double x) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof bits);
    mix(&bits, sizeof bits);
  };
  mix("icp-complex-v1", 14);
  mix_i64(cc.n_vertices());
  for (auto l : cc.labels) mix_i64(l);
  mix_i64(cc.n_edges());
  for (const auto& e : cc.edges) {
    mix_i64(e.u);
    mix_i64(e.v);
    mix_f64(e.theta);
  }
  mix_i64(cc.n_faces());
  for (const auto& f : cc.faces) {
    mix_i64(static_cast<std::int64_t>(f.size()));
    for (int e : f) mix_i64(e);
  }
  mix_i64(cc.infinity_face);
  for (int v : cc.infinity_marks) mix_i64(v);
  return h;
}

}  // namespace icp
