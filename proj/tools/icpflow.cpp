// Command line front end: generate complexes, validate them, run the flow,
// analyze traces, render patterns and export polyhedron data.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "icp/complex.hpp"
#include "icp/curvature.hpp"
#include "icp/flow.hpp"
#include "icp/generators.hpp"
#include "icp/json_io.hpp"
#include "icp/layout.hpp"
#include "icp/polyhedron.hpp"
#include "icp/projection.hpp"
#include "icp/svg.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotConverged = 2;

// Accepts "pi/2", "2pi/3", "0.4pi" or a plain number in radians.
double parse_angle(std::string s) {
  const auto p = s.find("pi");
  if (p == std::string::npos) return std::stod(s);
  const std::string head = s.substr(0, p);
  const std::string tail = s.substr(p + 2);
  double a = head.empty() ? 1.0 : std::stod(head);
  double b = 1.0;
  if (!tail.empty()) {
    if (tail[0] != '/') throw std::invalid_argument("bad angle: " + s);
    b = std::stod(tail.substr(1));
  }
  return a * std::numbers::pi / b;
}

icp::Background parse_geometry(const std::string& g) {
  if (g == "euclidean") return icp::Background::Euclidean;
  if (g == "hyperbolic") return icp::Background::Hyperbolic;
  throw std::invalid_argument("geometry must be euclidean or hyperbolic");
}

std::string metric_to_json(const icp::CellComplex& cc,
                           const icp::PackingMetric& m, bool converged) {
  json j;
  j["background"] = m.background == icp::Background::Hyperbolic ? "hyperbolic"
                                                                : "euclidean";
  j["converged"] = converged;
  j["u"] = json::array();
  for (int v = 0; v < cc.n_vertices(); ++v)
    j["u"].push_back({{"v", cc.labels[v]}, {"u", m.u[v]}});
  return j.dump(2) + "\n";
}

icp::PackingMetric metric_from_json(const icp::CellComplex& cc,
                                    const std::string& text, bool* converged) {
  json j = json::parse(text);
  icp::PackingMetric m;
  m.background = j.at("background") == "hyperbolic"
                     ? icp::Background::Hyperbolic
                     : icp::Background::Euclidean;
  if (converged) *converged = j.value("converged", false);
  std::map<std::int64_t, double> by_label;
  for (const auto& e : j.at("u"))
    by_label[e.at("v").get<std::int64_t>()] = e.at("u").get<double>();
  m.u.resize(cc.n_vertices());
  for (int v = 0; v < cc.n_vertices(); ++v) {
    auto it = by_label.find(cc.labels[v]);
    if (it == by_label.end())
      throw std::invalid_argument("metric misses a vertex of the complex");
    m.u[v] = it->second;
  }
  return m;
}

int cmd_generate(const std::string& name, int size, const std::string& theta,
                 bool dual, bool supplement, int mark_face,
                 const std::string& out) {
  icp::GeneratedComplex g = icp::generate_named(name, size, parse_angle(theta));
  icp::CellComplex cc = g.complex;
  if (dual) cc = icp::dual_complex(cc);
  if (supplement) cc = icp::supplement_weights(cc);
  if (mark_face >= 0) {
    cc.infinity_face = mark_face;
    cc.finalize();
  }
  const std::string text = icp::complex_to_json(cc);
  if (out.empty())
    std::cout << text;
  else
    icp::save_text(out, text);
  return kExitOk;
}

int cmd_validate(const std::string& path) {
  const icp::CellComplex cc = icp::load_complex(path);
  const auto deficits = icp::validate_c1(cc);
  const auto stats = icp::complex_stats(cc);
  json j;
  j["n_vertices"] = stats.n_vertices;
  j["n_edges"] = stats.n_edges;
  j["n_faces"] = stats.n_faces;
  j["hash"] = icp::complex_hash(cc);
  j["c1_violations"] = json::array();
  for (const auto& d : deficits)
    j["c1_violations"].push_back({{"face", d.face}, {"deficit", d.deficit}});
  std::cout << j.dump(2) << "\n";
  return deficits.empty() ? kExitOk : kExitNotConverged;
}

struct FlowArgs {
  std::string input, out_prefix = "run";
  std::string geometry = "euclidean";
  std::string init = "constant";  // constant | character
  double radius = 1.0;
  double c_hat = 0.1;
  double perturb = 0.0;
  unsigned seed = 1;
  std::string k_hat_mode = "zero";  // zero | from-infinity-marks
  std::string scheme = "rk45";
  double dt = 1e-2, t_max = 1e4, tol = 1e-8, step_tol = 1e-10;
  int snapshot_every = 0;
};

int cmd_flow(const FlowArgs& a) {
  const icp::CellComplex cc = icp::load_complex(a.input);
  icp::FlowConfig cfg;
  cfg.background = parse_geometry(a.geometry);
  cfg.scheme = a.scheme == "rk4" ? icp::Scheme::Rk4Fixed
                                 : icp::Scheme::Rk45Adaptive;
  cfg.dt_init = a.dt;
  cfg.t_max = a.t_max;
  cfg.tol_K = a.tol;
  cfg.step_tol = a.step_tol;
  cfg.snapshot_every = a.snapshot_every;
  if (a.k_hat_mode == "from-infinity-marks")
    cfg.k_hat = icp::prescribed_curvature_hat(cc);
  else if (a.k_hat_mode != "zero")
    throw std::invalid_argument("unknown k-hat mode " + a.k_hat_mode);

  icp::PackingMetric m0;
  if (a.init == "character") {
    if (cfg.background != icp::Background::Hyperbolic)
      throw std::invalid_argument("character init is hyperbolic only");
    m0 = icp::initial_metric_hyperbolic_character(cc, a.c_hat);
  } else if (a.init == "constant") {
    m0 = icp::PackingMetric::constant(cfg.background, cc.n_vertices(),
                                      a.radius);
  } else {
    throw std::invalid_argument("unknown init " + a.init);
  }
  if (a.perturb != 0.0) {
    std::mt19937 rng(a.seed);
    std::uniform_real_distribution<double> d(-a.perturb, a.perturb);
    const auto mask =
        cfg.free_mask.empty() ? cc.interior_mask() : cfg.free_mask;
    for (int v = 0; v < cc.n_vertices(); ++v)
      if (mask[v]) m0.u[v] += d(rng);
  }

  const icp::FlowTrace trace = icp::integrate(cc, m0, cfg);
  icp::save_text(a.out_prefix + ".trace.csv", icp::trace_summary_csv(trace));
  icp::save_text(a.out_prefix + ".snapshots.csv",
                 icp::trace_snapshots_csv(cc, trace, cfg.k_hat,
                                          cc.interior_mask()));
  icp::save_text(a.out_prefix + ".manifest.json",
                 icp::run_manifest_json(cc, cfg, trace, a.input));
  icp::PackingMetric mf;
  mf.background = cfg.background;
  mf.u = trace.u_final;
  icp::save_text(a.out_prefix + ".u.json",
                 metric_to_json(cc, mf, trace.converged));
  std::cerr << (trace.converged ? "converged" : "not converged")
            << " t=" << trace.t_final
            << " residual=" << trace.residual.back() << "\n";
  return trace.converged ? kExitOk : kExitNotConverged;
}

int cmd_analyze(const std::string& trace_csv, double tol) {
  const std::string text = icp::load_text(trace_csv);
  icp::FlowTrace trace;
  size_t pos = text.find('\n');
  if (pos == std::string::npos)
    throw std::invalid_argument("empty trace file");
  ++pos;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    double t, res, en, lo, hi;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &t, &res, &en, &lo,
                    &hi) != 5)
      throw std::invalid_argument("bad trace row: " + line);
    trace.times.push_back(t);
    trace.residual.push_back(res);
    trace.energy.push_back(en);
    trace.u_min.push_back(lo);
    trace.u_max.push_back(hi);
  }
  icp::ReportOptions opt;
  opt.tol_K = tol;
  const icp::ConvergenceReport rep = icp::convergence_report(trace, opt);
  json j;
  j["classification"] = icp::flow_class_name(rep.classification);
  j["final_residual"] = rep.final_residual;
  j["rate"] = rep.gamma_hat;
  j["power_exponent"] = rep.power_exponent;
  std::cout << j.dump(2) << "\n";
  return rep.classification == icp::FlowClass::Converged ? kExitOk
                                                         : kExitNotConverged;
}

int cmd_render(const std::string& complex_path, const std::string& metric_path,
               const std::string& plot_csv, bool triangulation, bool heat,
               bool force, const std::string& out) {
  if (!plot_csv.empty()) {
    const std::string text = icp::load_text(plot_csv);
    std::vector<double> ts, es;
    size_t pos = text.find('\n');
    pos = pos == std::string::npos ? text.size() : pos + 1;
    while (pos < text.size()) {
      size_t eol = text.find('\n', pos);
      if (eol == std::string::npos) eol = text.size();
      double t, res, en, lo, hi;
      if (std::sscanf(text.substr(pos, eol - pos).c_str(),
                      "%lf,%lf,%lf,%lf,%lf", &t, &res, &en, &lo, &hi) == 5) {
        ts.push_back(t);
        es.push_back(en);
      }
      pos = eol + 1;
    }
    icp::save_text(out, icp::render_loglog_plot(ts, es, "energy vs 1+t"));
    return kExitOk;
  }
  const icp::CellComplex cc = icp::load_complex(complex_path);
  bool converged = false;
  const icp::PackingMetric m =
      metric_from_json(cc, icp::load_text(metric_path), &converged);
  if (!converged && !force)
    throw std::runtime_error("metric not converged; pass --force to render");
  const icp::PatternLayout layout = icp::embed(cc, m);
  icp::SvgStyle style;
  style.triangulation = triangulation;
  if (heat) style.heat = icp::curvature_field(cc, m);
  icp::save_text(out, icp::render_svg(layout, &cc, style));
  return kExitOk;
}

int cmd_polyhedron(const std::string& complex_path,
                   const std::string& metric_path, bool force,
                   const std::string& out) {
  const icp::CellComplex cc = icp::load_complex(complex_path);
  bool converged = false;
  const icp::PackingMetric m =
      metric_from_json(cc, icp::load_text(metric_path), &converged);
  if (!converged && !force)
    throw std::runtime_error("metric not converged; pass --force");
  if (m.background != icp::Background::Euclidean)
    throw std::invalid_argument("polyhedron export expects a planar pattern");
  const icp::PatternLayout layout = icp::embed(cc, m);
  const auto circles = icp::project_layout(layout);
  const icp::PolyhedronData data =
      icp::polyhedron_from_pattern(cc, circles, layout);
  const std::string text = icp::polyhedron_to_json(cc, data);
  if (out.empty())
    std::cout << text;
  else
    icp::save_text(out, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ideal circle pattern flows"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit a complex as JSON");
  std::string gen_name, gen_theta = "pi/2", gen_out;
  int gen_size = 3, gen_mark_face = -1;
  bool gen_dual = false, gen_supplement = false;
  gen->add_option("name", gen_name,
                  "z2_lattice | hex_lattice | cube | dodecahedron")
      ->required();
  gen->add_option("--size", gen_size, "radius / layers where applicable");
  gen->add_option("--theta", gen_theta, "edge weight, e.g. pi/2 or 2pi/3");
  gen->add_flag("--dual", gen_dual, "emit the Poincare dual");
  gen->add_flag("--supplement", gen_supplement,
                "replace each weight by pi minus itself");
  gen->add_option("--mark-infinity-face", gen_mark_face,
                  "mark a face as the cell at infinity");
  gen->add_option("-o,--output", gen_out, "output path (default stdout)");

  // validate
  auto* val = app.add_subcommand("validate", "check a complex JSON file");
  std::string val_input;
  val->add_option("input", val_input)->required()->check(CLI::ExistingFile);

  // flow
  auto* flow = app.add_subcommand("flow", "integrate the flow to equilibrium");
  FlowArgs fa;
  flow->add_option("input", fa.input)->required()->check(CLI::ExistingFile);
  flow->add_option("-o,--output", fa.out_prefix, "output file prefix");
  flow->add_option("--geometry", fa.geometry, "euclidean | hyperbolic");
  flow->add_option("--init", fa.init, "constant | character");
  flow->add_option("--radius", fa.radius, "constant initial radius");
  flow->add_option("--c-hat", fa.c_hat, "character slack for --init character");
  flow->add_option("--perturb", fa.perturb, "uniform perturbation amplitude");
  flow->add_option("--seed", fa.seed, "perturbation seed");
  flow->add_option("--k-hat", fa.k_hat_mode, "zero | from-infinity-marks");
  flow->add_option("--scheme", fa.scheme, "rk45 | rk4");
  flow->add_option("--dt", fa.dt, "initial step");
  flow->add_option("--t-max", fa.t_max, "time horizon");
  flow->add_option("--tol", fa.tol, "curvature residual target");
  flow->add_option("--step-tol", fa.step_tol, "per-step error tolerance");
  flow->add_option("--snapshot-every", fa.snapshot_every,
                   "full snapshot cadence (0 = ends only)");

  // analyze
  auto* ana = app.add_subcommand("analyze", "classify a trace CSV");
  std::string ana_input;
  double ana_tol = 1e-8;
  ana->add_option("input", ana_input)->required()->check(CLI::ExistingFile);
  ana->add_option("--tol", ana_tol, "convergence threshold");

  // render
  auto* ren = app.add_subcommand("render", "draw a pattern or a decay plot");
  std::string ren_complex, ren_metric, ren_plot, ren_out = "out.svg";
  bool ren_tri = false, ren_heat = false, ren_force = false;
  ren->add_option("--complex", ren_complex)->check(CLI::ExistingFile);
  ren->add_option("--metric", ren_metric)->check(CLI::ExistingFile);
  ren->add_option("--plot", ren_plot, "trace CSV for a log-log energy plot")
      ->check(CLI::ExistingFile);
  ren->add_flag("--triangulation", ren_tri);
  ren->add_flag("--heat", ren_heat, "color circles by curvature");
  ren->add_flag("--force", ren_force, "render unconverged metrics");
  ren->add_option("-o,--output", ren_out);

  // polyhedron
  auto* pol = app.add_subcommand("polyhedron",
                                 "export half spaces and dihedral angles");
  std::string pol_complex, pol_metric, pol_out;
  bool pol_force = false;
  pol->add_option("--complex", pol_complex)
      ->required()
      ->check(CLI::ExistingFile);
  pol->add_option("--metric", pol_metric)->required()->check(CLI::ExistingFile);
  pol->add_flag("--force", pol_force);
  pol->add_option("-o,--output", pol_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (gen->parsed())
      return cmd_generate(gen_name, gen_size, gen_theta, gen_dual,
                          gen_supplement, gen_mark_face, gen_out);
    if (val->parsed()) return cmd_validate(val_input);
    if (flow->parsed()) return cmd_flow(fa);
    if (ana->parsed()) return cmd_analyze(ana_input, ana_tol);
    if (ren->parsed())
      return cmd_render(ren_complex, ren_metric, ren_plot, ren_tri, ren_heat,
                        ren_force, ren_out);
    if (pol->parsed())
      return cmd_polyhedron(pol_complex, pol_metric, pol_force, pol_out);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
