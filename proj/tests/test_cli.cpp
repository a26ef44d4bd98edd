#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "chartbraid/move.hpp"
#include "cli.hpp"
#include "diagram_gen.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = chartbraid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(CHARTBRAID_DATA_DIR) + "/" + rel; }

std::vector<std::string> shipped_files() {
  std::vector<std::string> files;
  for (const auto* dir : {"charts", "diagrams", "patches"}) {
    for (const auto& f : std::filesystem::directory_iterator(data(dir))) files.push_back(f.path().string());
  }
  for (const auto& f : std::filesystem::directory_iterator(chartbraid::default_catalog_dir())) files.push_back(f.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

TEST_CASE("documented examples") {
  auto c = run({"braid", "std", "-m", "2", "--word", "C"});
  CHECK(c.code == 0);
  CHECK(c.out == "B4: -1 -3 2 1 3 2\n");
  auto e = run({"braid", "eq", "B3: 1 2 1", "B3: 2 1 2"});
  CHECK(e.code == 0);
  CHECK(e.out == "equal\n");
  auto b = run({"diagram", "bound", "-m", "3", "-b", "2"});
  CHECK(b.code == 0);
  CHECK(b.out == "6\n");
}

TEST_CASE("braid verbs") {
  CHECK(run({"braid", "reduce", "B3: 1 2 -1 -2"}).out == "B3: -2 1\n");
  CHECK(run({"braid", "eq", "B3: 1 2 -1 -2", "B3: -2 1"}).code == 0);
  CHECK(run({"braid", "reduce", "B3: 1 -1 2 -2"}).out == "B3:\n");
  CHECK(run({"braid", "eq", "B3: 1 2", "B3: 2 1"}).code == 1);
  CHECK(run({"braid", "eq", "--method", "garside", "B4: 1 3", "B4: 3 1"}).code == 0);
  CHECK(run({"braid", "eq", "--method", "nope", "B4: 1 3", "B4: 3 1"}).code == 2);
  CHECK(run({"braid", "perm", "B4: -1 -3 2 1 3 2"}).out == "(1 4)(2 3)\n");
  CHECK(run({"braid", "verify-ids", "-m", "3"}).code == 0);
  CHECK(run({"braid", "verify-ids", "-m", "3", "--lower", "-i", "2", "--sign", "-1"}).code == 0);
  CHECK(run({"braid", "verify-ids", "-m", "4", "--branch"}).code == 0);
  CHECK(run({"braid", "verify-ids", "-m", "3", "-i", "3"}).code == 2);
  CHECK(run({"braid", "nf", "B3: 1 2 1"}).code == 0);
}

TEST_CASE("chart and diagram verbs") {
  CHECK(run({"chart", "validate", data("charts/white_hexagon.chart")}).out == "valid\n");
  CHECK(run({"chart", "invariants", data("charts/two_branch_sphere.chart")}).code == 0);
  CHECK(run({"chart", "monodromy", data("charts/torus_wrap.chart")}).code == 0);
  CHECK(run({"chart", "certify-disk", data("charts/disk_empty.chart"), data("charts/disk_empty.chart")}).code == 0);
  CHECK(run({"diagram", "validate", data("diagrams/crossing_edge.diagram")}).out == "valid\n");
  auto bad = run({"diagram", "validate", data("diagrams/dangling_curve.diagram")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("dcurve-end") != std::string::npos);
  auto color = run({"diagram", "color", data("diagrams/odd_region_cycle.diagram")});
  CHECK(color.code == 1);
  CHECK(color.err.find("checkerboard") != std::string::npos);
  auto lift = run({"diagram", "lift", data("diagrams/crossing_edge.diagram"), "--site", "dcurve:d"});
  CHECK(lift.code == 0);
  CHECK(lift.out.find("word B4: -1 -3 2 1 3 2") != std::string::npos);
  auto parity = run({"diagram", "parity", data("diagrams/sphere_double_circle.diagram"), "--loop", "A d S d A"});
  CHECK(parity.code == 0);
  CHECK(parity.out.rfind("crossings 2 even", 0) == 0);
  CHECK(run({"diagram", "bound", "-m", "0", "-b", "2"}).code == 2);
}

TEST_CASE("move verbs") {
  auto list = run({"move", "list"});
  CHECK(list.code == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 13);
  auto m = run({"move", "match", data("patches/sheet.diagram"), "R1"});
  CHECK(m.code == 0);
  CHECK(m.out.rfind("match R1:forward m=2\n", 0) == 0);
  CHECK(run({"move", "match", data("patches/r6_black.diagram"), "R6"}).code == 1);
  auto a = run({"move", "apply", data("patches/sheet.diagram"), "R1"});
  CHECK(a.code == 0);
  CHECK(a.out.find("bpoint b1 sign=-") != std::string::npos);
  auto back = run({"move", "apply", data("patches/sheet.diagram"), "R1:backward"});
  CHECK(back.code == 1);
  CHECK(back.err.find("match") != std::string::npos);
  CHECK(run({"move", "certify", "O1", "-m", "2", "--param", "i=1", "--param", "eps=1"}).code == 0);
  CHECK(run({"move", "certify", "O1", "-m", "2", "--param", "i=5", "--param", "eps=1"}).code == 2);
  CHECK(run({"move", "certify", "R6", "-m", "3"}).out.find("passed half twist symmetry") != std::string::npos);
  CHECK(run({"move", "certify", "--all"}).code == 0);
  CHECK(run({"move", "show", "O4", "-m", "2", "--param", "i=1", "--param", "eps=1"}).out.find("chart m=2") != std::string::npos);
  CHECK(run({"move", "--catalog", "/nonexistent", "list"}).code == 2);
}

TEST_CASE("catalog directory override") {
  auto dir = std::filesystem::temp_directory_path() / "chartbraid_catalog_override";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(chartbraid::default_catalog_dir() / "R1.move", dir / "R1.move");
  setenv("CHARTBRAID_CATALOG", dir.c_str(), 1);
  auto list = run({"move", "list"});
  unsetenv("CHARTBRAID_CATALOG");
  std::filesystem::remove_all(dir);
  CHECK(list.out.rfind("R1 ", 0) == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 1);
}

TEST_CASE("json reports carry the schema version") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"--json", "braid", "std", "-m", "3"},
           {"--json", "diagram", "validate", data("diagrams/triple_point.diagram")},
           {"--json", "move", "certify", "R3", "-m", "2"},
           {"--json", "chart", "invariants", data("charts/empty_genus2_m2.chart")}}) {
    auto r = run(args);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == 1);
  }
  auto e = run({"--json", "chart", "validate", data("nothing.chart")});
  CHECK(e.code == 2);
  CHECK(nlohmann::json::parse(e.err).at("error").at("kind") == "usage");
  auto p = run({"--json", "braid", "reduce", "B3: 1 q"});
  auto j = nlohmann::json::parse(p.err);
  CHECK(j.at("error").at("line") == 1);
  CHECK(j.at("error").at("column") == 7);
}

TEST_CASE("round trip and determinism on shipped files") {
  for (const auto& f : shipped_files()) {
    auto r = run({"render", "text", f});
    CHECK_MESSAGE(r.code == 0, f);
    CHECK_MESSAGE(r.out == gen::slurp(f), f);
    if (f.size() > 5 && f.substr(f.size() - 5) == ".move") continue;
    auto d1 = run({"render", "dot", f});
    auto d2 = run({"render", "dot", f});
    CHECK_MESSAGE(d1.code == 0, f);
    CHECK(d1.out == d2.out);
  }
  auto c1 = run({"--json", "move", "certify", "--all"});
  auto c2 = run({"--json", "move", "certify", "--all"});
  CHECK(c1.out == c2.out);
}
