#include <algorithm>
#include <numbers>

#include "doctest.h"
#include "json.hpp"

#include "icp/flow.hpp"
#include "icp/generators.hpp"
#include "icp/json_io.hpp"
#include "icp/layout.hpp"
#include "icp/polyhedron.hpp"
#include "icp/projection.hpp"
#include "icp/svg.hpp"

using namespace icp;
using std::numbers::pi;

TEST_CASE("complex serialization roundtrip") {
  auto cc = z2_lattice(2, pi / 2).complex;
  cc.infinity_marks = {0, 3};
  const std::string text = complex_to_json(cc);
  const CellComplex back = complex_from_json(text);
  CHECK(complex_hash(back) == complex_hash(cc));
  CHECK(back.finalized());
  CHECK(back.infinity_vertices() == cc.infinity_vertices());
}

TEST_CASE("infinity face survives the roundtrip") {
  auto cc = supplement_weights(dual_complex(cube_complex(2 * pi / 3).complex));
  cc.infinity_face = 2;
  cc.finalize();
  const CellComplex back = complex_from_json(complex_to_json(cc));
  CHECK(back.infinity_face == 2);
  CHECK(complex_hash(back) == complex_hash(cc));
}

TEST_CASE("bad complex json is rejected") {
  CHECK_THROWS(complex_from_json("{"));
  CHECK_THROWS(complex_from_json(R"({"vertices":[1,1],"edges":[]})"));
  CHECK_THROWS(complex_from_json(
      R"({"vertices":[1,2],"edges":[{"u":1,"v":9,"theta":1.0}]})"));
}

TEST_CASE("svg output is deterministic") {
  const auto g = z2_lattice(2, pi / 2);
  const auto m =
      PackingMetric::constant(Background::Euclidean, g.complex.n_vertices(), 1.0);
  const auto layout = embed(g.complex, m);
  SvgStyle style;
  style.triangulation = true;
  const std::string a = render_svg(layout, &g.complex, style);
  const std::string b = render_svg(layout, &g.complex, style);
  CHECK(a == b);
  CHECK(a.find("<circle") != std::string::npos);
  CHECK(a.find("<line") != std::string::npos);
  CHECK(a.find("-0.0000\"") == std::string::npos);  // canonical zeros
}

TEST_CASE("empty layout renders to a bare viewBox") {
  PatternLayout layout;
  const std::string s = render_svg(layout);
  CHECK(s.find("viewBox") != std::string::npos);
  CHECK(s.find("<circle") == std::string::npos);
}

TEST_CASE("heat coloring fills circles") {
  const auto g = z2_lattice(2, pi / 2);
  const auto m =
      PackingMetric::constant(Background::Euclidean, g.complex.n_vertices(), 1.0);
  const auto layout = embed(g.complex, m);
  SvgStyle style;
  style.heat.assign(g.complex.n_vertices(), 0.0);
  style.heat[g.center] = 1.0;
  const std::string s = render_svg(layout, nullptr, style);
  CHECK(s.find("fill=\"#ff0000\"") != std::string::npos);
  CHECK(s.find("fill=\"#ffffff\"") != std::string::npos);
}

TEST_CASE("log-log plot emits a polyline") {
  const std::string s =
      render_loglog_plot({0.0, 1.0, 10.0, 100.0}, {1.0, 0.5, 0.05, 0.005});
  CHECK(s.find("<polyline") != std::string::npos);
  CHECK(s == render_loglog_plot({0.0, 1.0, 10.0, 100.0},
                                {1.0, 0.5, 0.05, 0.005}));
}

TEST_CASE("layout and polyhedron dumps parse as json") {
  const auto g = z2_lattice(2, pi / 2);
  const auto m =
      PackingMetric::constant(Background::Euclidean, g.complex.n_vertices(), 1.0);
  const auto layout = embed(g.complex, m);
  const auto jl = nlohmann::json::parse(layout_to_json(g.complex, layout));
  CHECK(jl.at("ambient") == "plane");
  CHECK(jl.at("circles").size() == 9);

  const auto circles = project_layout(layout);
  const auto data = polyhedron_from_pattern(g.complex, circles, layout);
  const auto jp = nlohmann::json::parse(polyhedron_to_json(g.complex, data));
  CHECK(jp.at("halfspaces").size() == 9);
  CHECK(jp.at("edges").size() == data.edges.size());
  CHECK(!jp.at("ideal_vertices").empty());
}

TEST_CASE("trace exports") {
  const auto g = z2_lattice(3, pi / 2);
  PackingMetric m =
      PackingMetric::constant(Background::Euclidean, g.complex.n_vertices(), 1.0);
  m.u[g.center] = 0.2;
  FlowConfig cfg;
  cfg.snapshot_every = 2;
  const auto trace = integrate(g.complex, m, cfg);
  const std::string sum = trace_summary_csv(trace);
  CHECK(sum.rfind("t,residual,energy,u_min,u_max\n", 0) == 0);
  CHECK(std::count(sum.begin(), sum.end(), '\n') ==
        static_cast<long>(trace.times.size()) + 1);
  const std::string snap = trace_snapshots_csv(g.complex, trace, {},
                                               g.complex.interior_mask());
  CHECK(std::count(snap.begin(), snap.end(), '\n') ==
        static_cast<long>(trace.snapshot_times.size()) + 1);

  const auto jm = nlohmann::json::parse(
      run_manifest_json(g.complex, cfg, trace, "unit-test"));
  CHECK(jm.at("complex").at("hash") == complex_hash(g.complex));
  CHECK(jm.at("result").at("converged") == true);
}

TEST_CASE("file helpers survive a roundtrip") {
  const std::string path = "io_test_scratch.txt";
  save_text(path, "hello\n");
  CHECK(load_text(path) == "hello\n");
  CHECK_THROWS(load_text("does_not_exist_here.json"));
}
