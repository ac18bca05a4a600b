#include "icp/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace icp {

using nlohmann::json;

CellComplex complex_from_json(const std::string& text) {
  json j = json::parse(text);
  CellComplex cc;
  std::map<std::int64_t, int> index_of;
  for (const auto& v : j.at("vertices")) {
    const std::int64_t label = v.get<std::int64_t>();
    if (index_of.count(label))
      throw std::invalid_argument("duplicate vertex label");
    index_of[label] = static_cast<int>(cc.labels.size());
    cc.labels.push_back(label);
  }
  auto vid = [&](const json& x) {
    auto it = index_of.find(x.get<std::int64_t>());
    if (it == index_of.end())
      throw std::invalid_argument("edge references unknown vertex label");
    return it->second;
  };
  for (const auto& e : j.at("edges")) {
    EdgeRec r;
    r.u = vid(e.at("u"));
    r.v = vid(e.at("v"));
    r.theta = e.at("theta").get<double>();
    cc.edges.push_back(r);
  }
  if (j.contains("faces"))
    for (const auto& f : j["faces"])
      cc.faces.push_back(f.get<std::vector<int>>());
  if (j.contains("infinity")) {
    const auto& inf = j["infinity"];
    if (inf.contains("face")) cc.infinity_face = inf["face"].get<int>();
    if (inf.contains("vertices"))
      for (const auto& v : inf["vertices"]) cc.infinity_marks.push_back(vid(v));
  }
  cc.finalize();
  return cc;
}

std::string complex_to_json(const CellComplex& cc) {
  json j;
  j["vertices"] = cc.labels;
  j["edges"] = json::array();
  for (const auto& e : cc.edges)
    j["edges"].push_back(
        {{"u", cc.labels[e.u]}, {"v", cc.labels[e.v]}, {"theta", e.theta}});
  j["faces"] = cc.faces;
  if (cc.infinity_face != -1 || !cc.infinity_marks.empty()) {
    json inf = json::object();
    if (cc.infinity_face != -1) inf["face"] = cc.infinity_face;
    if (!cc.infinity_marks.empty()) {
      json vs = json::array();
      for (int v : cc.infinity_marks) vs.push_back(cc.labels[v]);
      inf["vertices"] = vs;
    }
    j["infinity"] = inf;
  }
  return j.dump(2) + "\n";
}

CellComplex load_complex(const std::string& path) {
  return complex_from_json(load_text(path));
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("short write to " + path);
}

std::string layout_to_json(const CellComplex& cc, const PatternLayout& layout) {
  json j;
  j["ambient"] = layout.ambient == Ambient::Disk ? "disk" : "plane";
  j["circles"] = json::array();
  for (const auto& c : layout.circles) {
    if (!c.placed) continue;
    json jc = {{"v", cc.labels[c.v]}, {"cx", c.cx}, {"cy", c.cy}, {"r", c.r}};
    if (layout.ambient == Ambient::Disk) {
      jc["hx"] = c.hx;
      jc["hy"] = c.hy;
      jc["hr"] = c.hr;
    }
    j["circles"].push_back(jc);
  }
  j["misclosure"] = {{"interior", layout.misclosure_interior},
                     {"rim", layout.misclosure_rim}};
  return j.dump(2) + "\n";
}

std::string polyhedron_to_json(const CellComplex& cc,
                               const PolyhedronData& data) {
  json j;
  j["halfspaces"] = json::array();
  for (int v = 0; v < cc.n_vertices(); ++v) {
    if (!data.valid[v]) continue;
    const auto& c = data.circles[v];
    // half space n . x <= d in the ball model
    j["halfspaces"].push_back({{"v", cc.labels[v]},
                               {"n", {c.n[0], c.n[1], c.n[2]}},
                               {"d", c.d}});
  }
  j["edges"] = json::array();
  for (const auto& e : data.edges)
    j["edges"].push_back({{"u", cc.labels[e.u]},
                          {"v", cc.labels[e.v]},
                          {"dihedral", e.dihedral}});
  j["ideal_vertices"] = json::array();
  for (int f = 0; f < cc.n_faces(); ++f)
    if (data.vertex_valid[f])
      j["ideal_vertices"].push_back({{"face", f},
                                     {"p",
                                      {data.ideal_vertices[f][0],
                                       data.ideal_vertices[f][1],
                                       data.ideal_vertices[f][2]}}});
  return j.dump(2) + "\n";
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string trace_summary_csv(const FlowTrace& trace) {
  std::string s = "t,residual,energy,u_min,u_max\n";
  for (size_t i = 0; i < trace.times.size(); ++i)
    s += fmt(trace.times[i]) + "," + fmt(trace.residual[i]) + "," +
         fmt(trace.energy[i]) + "," + fmt(trace.u_min[i]) + "," +
         fmt(trace.u_max[i]) + "\n";
  return s;
}

std::string trace_snapshots_csv(const CellComplex& cc, const FlowTrace& trace,
                                const std::vector<double>& k_hat,
                                const std::vector<char>& free_mask) {
  const int n = cc.n_vertices();
  std::string s = "t";
  for (int v = 0; v < n; ++v) s += ",u_" + std::to_string(cc.labels[v]);
  for (int v = 0; v < n; ++v) s += ",K_" + std::to_string(cc.labels[v]);
  s += ",energy,residual\n";
  for (size_t i = 0; i < trace.snapshot_times.size(); ++i) {
    const auto& u = trace.u_snapshots[i];
    const auto& K = trace.k_snapshots[i];
    s += fmt(trace.snapshot_times[i]);
    for (int v = 0; v < n; ++v) s += "," + fmt(u[v]);
    for (int v = 0; v < n; ++v) s += "," + fmt(K[v]);
    double res = 0.0;
    for (int v = 0; v < n; ++v)
      if (free_mask.empty() || free_mask[v])
        res = std::max(res,
                       std::abs(K[v] - (k_hat.empty() ? 0.0 : k_hat[v])));
    s += "," + fmt(dirichlet_energy(cc, u)) + "," + fmt(res) + "\n";
  }
  return s;
}

std::string run_manifest_json(const CellComplex& cc, const FlowConfig& config,
                              const FlowTrace& trace,
                              const std::string& source) {
  json j;
  j["source"] = source;
  j["complex"] = {{"hash", complex_hash(cc)},
                  {"n_vertices", cc.n_vertices()},
                  {"n_edges", cc.n_edges()},
                  {"n_faces", cc.n_faces()}};
  j["config"] = {
      {"background",
       config.background == Background::Hyperbolic ? "hyperbolic"
                                                   : "euclidean"},
      {"scheme",
       config.scheme == Scheme::Rk45Adaptive ? "rk45" : "rk4"},
      {"dt_init", config.dt_init},
      {"t_max", config.t_max},
      {"tol_K", config.tol_K},
      {"step_tol", config.step_tol},
      {"u_cap", config.u_cap},
      {"snapshot_every", config.snapshot_every}};
  j["result"] = {{"converged", trace.converged},
                 {"t_final", trace.t_final},
                 {"residual", trace.residual.empty() ? 0.0
                                                     : trace.residual.back()},
                 {"steps", trace.times.size()}};
  return j.dump(2) + "\n";
}

}  // namespace icp
