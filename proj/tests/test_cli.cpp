#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(ICPFLOW_BIN) + " " + args +
                          " >cli_stdout.txt 2>cli_stderr.txt";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

bool file_contains(const std::string& path, const std::string& needle) {
  std::ifstream in(path);
  std::string all((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  return all.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("generate and validate") {
  CHECK(run("generate z2_lattice --size 3 --theta pi/2 -o cli_z2.json") == 0);
  CHECK(run("validate cli_z2.json") == 0);
  CHECK(file_contains("cli_stdout.txt", "\"c1_violations\": []"));
  CHECK(run("generate no_such_thing") == 1);
  CHECK(run("validate missing_file.json") == 1);
}

TEST_CASE("flow exits zero exactly when converged") {
  CHECK(run("flow cli_z2.json --geometry euclidean --perturb 0.2 --seed 3 "
            "-o cli_run") == 0);
  CHECK(file_contains("cli_run.manifest.json", "\"converged\": true"));
  // an over-tight horizon cannot converge
  CHECK(run("flow cli_z2.json --geometry euclidean --perturb 0.2 --seed 3 "
            "--t-max 1e-3 -o cli_short") == 2);
}

TEST_CASE("analyze reads the trace back") {
  CHECK(run("analyze cli_run.trace.csv") == 0);
  CHECK(file_contains("cli_stdout.txt", "\"classification\": \"converged\""));
}

TEST_CASE("render produces svg output") {
  CHECK(run("render --complex cli_z2.json --metric cli_run.u.json "
            "-o cli_out.svg") == 0);
  CHECK(file_contains("cli_out.svg", "<svg"));
  CHECK(run("render --plot cli_run.trace.csv -o cli_plot.svg") == 0);
  CHECK(file_contains("cli_plot.svg", "polyline"));
}

TEST_CASE("polyhedron export") {
  CHECK(run("polyhedron --complex cli_z2.json --metric cli_run.u.json "
            "-o cli_poly.json") == 0);
  CHECK(file_contains("cli_poly.json", "dihedral"));
}

TEST_CASE("usage errors exit with one") {
  CHECK(run("") == 1);
  CHECK(run("frobnicate") == 1);
  CHECK(run("flow") == 1);
}
