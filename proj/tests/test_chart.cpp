#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "chart_gen.hpp"
#include "chartbraid/chart.hpp"
#include "chartbraid/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chartbraid;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Chart load(const std::string& name) {
  return parse_chart(slurp(std::filesystem::path(CHARTBRAID_DATA_DIR) / "charts" / name));
}

std::vector<int> letters(const BraidWord& w) { return {w.letters().begin(), w.letters().end()}; }

TransversePath segment(Point a, Point b) { return {{{a, b}}}; }

}  // namespace

TEST_CASE("schema geometry") {
  SurfaceSchema torus(1);
  CHECK(torus.corner(0) == Point{-10, -10});
  CHECK(torus.boundary_point(1, 0.5) == Point{10, 0});
  CHECK(torus.partner(0) == 2);
  CHECK(torus.partner(3) == 1);
  CHECK(torus.presentation() == "a1 b1 a1^-1 b1^-1");
  CHECK(SurfaceSchema(2).presentation() == "a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1");
  CHECK(SurfaceSchema::sphere().presentation().empty());
  CHECK(SurfaceSchema(3).euler_characteristic() == -4);
  CHECK(SurfaceSchema::disk().euler_characteristic() == 1);
  auto oct = SurfaceSchema(2);
  for (int k = 0; k < 8; ++k) {
    Point mid = oct.boundary_point(k, 0.5);
    CHECK(std::hypot(mid.x, mid.y) == doctest::Approx(10));
  }
  CHECK(oct.boundary_point(0, 0.5).y == doctest::Approx(-10));
  CHECK_THROWS_AS(SurfaceSchema(-1), UsageError);
  CHECK_THROWS_AS(SurfaceSchema(1, true), UsageError);
}

TEST_CASE("chart text round trips exactly") {
  for (const auto& entry : std::filesystem::directory_iterator(std::filesystem::path(CHARTBRAID_DATA_DIR) / "charts")) {
    auto text = slurp(entry.path());
    auto chart = parse_chart(text);
    CHECK_MESSAGE(serialize(chart) == text, entry.path().filename().string());
    CHECK_MESSAGE(validate_chart(chart).ok(), entry.path().filename().string() << ": " << validate_chart(chart).summary());
  }
}

TEST_CASE("chart parse errors carry positions") {
  auto fails_at = [](const std::string& text, std::size_t line, std::size_t column) {
    try {
      parse_chart(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      return;
    }
    FAIL("no parse error for: " << text);
  };
  fails_at("chart m=2 genus=0\nv a purple\n", 2, 5);
  fails_at("chart m=x genus=0\n", 1, 7);
  fails_at("v a black\n", 1, 1);
  fails_at("chart m=2 genus=0\ne e1 1 a b\n", 2, 11);
  fails_at("chart m=2 genus=0\ne e1 1 a b via 1;2\n", 2, 16);
  fails_at("chart m=2 genus=0\nrot a e1\n", 2, 7);
  fails_at("chart m=2 genus=1 disk\n", 1, 19);
  fails_at("chart m=2 genus=0\n# late\n", 2, 1);
  fails_at("", 1, 1);
}

TEST_CASE("spec examples for validation") {
  Chart empty;
  empty.m = 3;
  for (int g : {0, 1, 2}) {
    empty.schema = SurfaceSchema(g);
    CHECK(validate_chart(empty).ok());
  }
  CHECK(validate_chart(load("two_branch_sphere.chart")).ok());

  // A degree-6 vertex whose circle word is s1 s2 s1 s2^-1 s1 s2^-1.
  auto c = load("white_hexagon.chart");
  for (auto& e : c.edges) {
    if (e.id == "e5") std::swap(e.from, e.to);
  }
  for (auto& end : c.rotation["w"])
    if (end.edge == "e5") end.source = false;
  c.rotation["p5"] = {{"e5", true}};
  CHECK(to_string(circle_word(c, "w")) == "B3: 1 2 1 -2 1 -2");
  auto report = validate_chart(c);
  CHECK(report.has_clause("relator"));
  CHECK(report.violations.size() == 1);
  // The permutation image is (s1 s2)^3 = id; the exponent sum 2 is what
  // separates it from the trivial braid.
  CHECK(permutation_of(circle_word(c, "w")).is_identity());
  CHECK(circle_word(c, "w").exponent_sum() == 2);
}

TEST_CASE("seeded single-clause mutations") {
  SUBCASE("degree") {
    auto c = load("crossing_m4.chart");
    c.vertices[0].kind = VertexKind::white;
    auto r = validate_chart(c);
    CHECK(r.has_clause("degree"));
    CHECK(r.violations.front().element == "x");
  }
  SUBCASE("crossing labels too close") {
    auto c = load("crossing_m4.chart");
    for (auto& e : c.edges)
      if (e.label == 3) e.label = 2;
    auto r = validate_chart(c);
    CHECK(r.has_clause("crossing"));
    CHECK_FALSE(r.has_clause("relator"));
  }
  SUBCASE("crossing not straight through") {
    auto c = load("crossing_m4.chart");
    c.rotation["x"] = {{"a2", true}, {"a1", false}, {"c2", true}, {"c1", false}};
    CHECK(validate_chart(c).has_clause("crossing"));
  }
  SUBCASE("white labels") {
    auto c = load("white_hexagon.chart");
    c.m = 4;
    for (auto& e : c.edges)
      if (e.id == "e2") e.label = 3;
    CHECK(validate_chart(c).has_clause("white"));
  }
  SUBCASE("label range") {
    auto c = load("two_branch_sphere.chart");
    c.edges[0].label = 2;
    CHECK(validate_chart(c).has_clause("label"));
  }
  SUBCASE("boundary on a sphere") {
    auto c = load("torus_wrap.chart");
    c.schema = SurfaceSchema::sphere();
    CHECK(validate_chart(c).has_clause("boundary"));
  }
  SUBCASE("boundary mate missing") {
    auto c = load("torus_wrap.chart");
    c.edges[0].to.boundary.offset = 0.5;
    CHECK(validate_chart(c).has_clause("boundary"));
  }
  SUBCASE("rotation out of order") {
    auto c = load("white_hexagon.chart");
    std::swap(c.rotation["w"][0], c.rotation["w"][1]);
    auto r = validate_chart(c);
    CHECK(r.has_clause("rotation"));
  }
  SUBCASE("edges crossing without a vertex") {
    auto c = load("two_branch_sphere.chart");
    c.vertices.push_back({"q1", VertexKind::black, Point{0, -1}});
    c.vertices.push_back({"q2", VertexKind::black, Point{0, 4}});
    c.edges.push_back({"e2", 1, Endpoint::at_vertex("q1"), Endpoint::at_vertex("q2"), {}});
    c.rotation["q1"] = {{"e2", true}};
    c.rotation["q2"] = {{"e2", false}};
    auto r = validate_chart(c);
    CHECK(r.has_clause("embedding"));
  }
  SUBCASE("unknown reference") {
    auto c = load("two_branch_sphere.chart");
    c.edges[0].to = Endpoint::at_vertex("nowhere");
    CHECK(validate_chart(c).has_clause("reference"));
  }
  SUBCASE("free vertex with extra edges") {
    auto c = load("disk_hoop.chart");
    c.edges.push_back({"g", 1, Endpoint::at_vertex("f"), Endpoint::at_vertex("f"), {{1, 8}, {-1, 8}}});
    CHECK(validate_chart(c).has_clause("degree"));
  }
}

TEST_CASE("intersection words") {
  auto c = load("two_branch_sphere.chart");
  // The edge runs from (-3,0) up to (0,2) and down to (3,0).
  auto up = intersection_word(c, segment({-1, -5}, {-1, 5}));
  CHECK(to_string(up) == "B2: -1");
  auto path = segment({-1, -5}, {-1, 5});
  path.pieces[0].push_back({-1.5, -5});
  CHECK(intersection_word(c, path).size() == 2);
  CHECK(is_trivial(intersection_word(c, path)));
  CHECK(intersection_word(c, path.reversed()) == intersection_word(c, path).inverse());
  CHECK_THROWS_AS(intersection_word(c, segment({-3, -5}, {-3, 5})), ValidationError);
  CHECK_THROWS_AS(intersection_word(c, segment({0, 2}, {0, 5})), ValidationError);

  Chart two;
  two.m = 3;
  two.vertices = {{"a", VertexKind::black, Point{2, -5}}, {"b", VertexKind::black, Point{2, 5}}};
  two.edges = {{"e", 2, Endpoint::at_vertex("a"), Endpoint::at_vertex("b"), {}}};
  two.rotation = {{"a", {{"e", true}}}, {"b", {{"e", false}}}};
  CHECK(to_string(intersection_word(two, segment({0, 0}, {4, 0}))) == "B3: 2");
}

TEST_CASE("white vertex circle is a rotation of the braid relator") {
  auto c = load("white_hexagon.chart");
  auto w = circle_word(c, "w");
  CHECK(to_string(w) == "B3: 1 2 1 -2 -1 -2");
  CHECK(is_trivial(w));
  // A small polygonal circle around the white vertex reads the same word.
  TransversePath circle;
  std::vector<Point> ring;
  for (int k = 0; k <= 36; ++k) {
    double a = -0.05 + 2 * 3.141592653589793 * k / 36;
    ring.push_back({2 + 0.5 * std::cos(a), 2 + 0.5 * std::sin(a)});
  }
  ring.back() = ring.front();
  circle.pieces.push_back(ring);
  CHECK(intersection_word(c, circle) == w);
}

TEST_CASE("path splitting and reversal") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> pos(-9, 9);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    auto g = gen::random_chart(rng, 5, 0);
    std::vector<Point> pts;
    for (int k = 0; k < 5; ++k) pts.push_back({pos(rng), pos(rng)});
    TransversePath whole{{pts}};
    TransversePath split{{{pts[0], pts[1], pts[2]}, {pts[2], pts[3], pts[4]}}};
    try {
      auto w = intersection_word(g.chart, whole);
      CHECK(intersection_word(g.chart, split) == w);
      CHECK(free_reduce(intersection_word(g.chart, whole.reversed())) == free_reduce(w.inverse()));
      ++checked;
    } catch (const ValidationError&) {
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("small loops without black vertices read trivial braids") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> pos(-9, 9);
  std::uniform_real_distribution<double> rad(0.5, 4);
  int trivial_checked = 0;
  int around_black = 0;
  for (int t = 0; t < 200; ++t) {
    auto g = gen::random_chart(rng, 5, 0);
    Point c{pos(rng), pos(rng)};
    double r = rad(rng);
    std::vector<Point> ring;
    for (int k = 0; k < 24; ++k) {
      double a = 0.013 + 2 * 3.141592653589793 * k / 24;
      ring.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
    }
    ring.push_back(ring.front());
    bool inside_polygon = std::all_of(ring.begin(), ring.end(), [](Point p) { return std::abs(p.x) < 10 && std::abs(p.y) < 10; });
    if (!inside_polygon) continue;
    int blacks = 0;
    for (const auto& v : g.chart.vertices) {
      double d = std::hypot(v.position->x - c.x, v.position->y - c.y);
      if (std::abs(d - r) < 0.05) blacks = -1000;
      if (d < r && v.kind == VertexKind::black) ++blacks;
    }
    if (blacks < 0) continue;
    BraidWord w;
    try {
      w = intersection_word(g.chart, {{ring}});
    } catch (const ValidationError&) {
      continue;
    }
    if (blacks == 0) {
      CHECK(is_trivial(w));
      ++trivial_checked;
    } else {
      CHECK(permutation_of(w).length() % 2 == blacks % 2);
      ++around_black;
    }
  }
  CHECK(trivial_checked > 30);
  CHECK(around_black > 10);
}

TEST_CASE("monodromy examples") {
  Chart torus;
  torus.m = 3;
  torus.schema = SurfaceSchema(1);
  auto mono = monodromy_generators(torus);
  REQUIRE(mono.schema_loops.size() == 2);
  CHECK(mono.schema_loops[0].first == "a1");
  CHECK(mono.schema_loops[0].second.empty());
  CHECK(mono.schema_loops[1].second.empty());

  auto two = monodromy_generators(load("two_branch_sphere.chart"));
  REQUIRE(two.branch_loops.size() == 2);
  for (const auto& [id, w] : two.branch_loops) {
    CHECK(free_reduce(w).size() == 1);
  }
  // b2 sits at angle 0, b1 at angle pi.
  CHECK(two.branch_loops[0].first == "b2");
  CHECK(to_string(free_reduce(two.branch_loops[0].second)) == "B2: 1");
  CHECK(to_string(free_reduce(two.branch_loops[1].second)) == "B2: -1");

  auto wrap = monodromy_generators(load("torus_wrap.chart"));
  CHECK(wrap.schema_loops[0].second.empty());
  CHECK(to_string(wrap.schema_loops[1].second) == "B2: -1");

  auto c = load("two_branch_sphere.chart");
  c.edges[0].label = 3;
  CHECK_THROWS_AS(monodromy_generators(c), ValidationError);
}

TEST_CASE("monodromy agrees with circle words") {
  for (const char* name : {"white_hexagon.chart", "crossing_m4.chart", "disk_branch.chart"}) {
    auto c = load(name);
    auto mono = monodromy_generators(c);
    for (const auto& [id, w] : mono.branch_loops) {
      auto circle = circle_word(c, id);
      // w = W circle W^-1 for the chord word W.
      auto chord = w.size() > 1 ? BraidWord(c.m, std::vector<int>(w.letters().begin(), w.letters().begin() + static_cast<long>((w.size() - 1) / 2))) : BraidWord(c.m);
      CHECK(w == chord * circle * chord.inverse());
    }
  }
}

TEST_CASE("covering invariants examples") {
  Chart torus;
  torus.m = 3;
  torus.schema = SurfaceSchema(1);
  auto inv = covering_invariants(torus);
  CHECK(inv.branch_count == 0);
  CHECK(inv.euler_characteristic == 0);
  CHECK(inv.component_count == 3);
  CHECK(inv.component_degrees == std::vector<int>{1, 1, 1});

  auto two = covering_invariants(load("two_branch_sphere.chart"));
  CHECK(two.branch_count == 2);
  CHECK(two.euler_characteristic == 2);
  CHECK(two.component_count == 1);

  auto g2 = covering_invariants(load("empty_genus2_m2.chart"));
  CHECK(g2.euler_characteristic == -4);
  CHECK(g2.component_count == 2);

  auto cross = covering_invariants(load("crossing_m4.chart"));
  CHECK(cross.euler_characteristic == 4);
  CHECK(cross.component_degrees == std::vector<int>{2, 2});
}

TEST_CASE("orbits agree with brute force") {
  std::mt19937 rng(29);
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 30; ++t) {
      std::vector<Permutation> gens;
      std::vector<std::vector<int>> raw;
      std::uniform_int_distribution<int> count(0, 3);
      int k = count(rng);
      for (int j = 0; j < k; ++j) {
        std::vector<int> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::swap(im[static_cast<std::size_t>(pick(rng))], im[static_cast<std::size_t>(pick(rng))]);
        if (n > 2 && count(rng) == 0) std::swap(im[static_cast<std::size_t>(pick(rng))], im[static_cast<std::size_t>(pick(rng))]);
        gens.emplace_back(im);
        raw.push_back(im);
      }
      std::set<std::set<int>> got;
      for (const auto& o : orbits(n, gens)) got.insert({o.begin(), o.end()});
      CHECK(got == oracle::brute_orbits(n, raw));
    }
  }
}

TEST_CASE("generated charts satisfy Riemann-Hurwitz and the orbit count") {
  std::mt19937 rng(31);
  for (int t = 0; t < 40; ++t) {
    auto g = gen::random_chart(rng);
    const auto& c = g.chart;
    auto inv = covering_invariants(c);
    int b = static_cast<int>(c.count(VertexKind::black));
    CHECK(inv.euler_characteristic == c.m * (2 - 2 * c.schema.genus()) - b);
    int sum = 0;
    for (int d : inv.component_degrees) sum += d;
    CHECK(sum == c.m);
    auto mono = monodromy_generators(c);
    std::vector<std::vector<int>> gens;
    for (const auto& [n, w] : mono.schema_loops) gens.push_back(oracle::strand_endpoints(c.m, letters(w)));
    for (const auto& [n, w] : mono.branch_loops) gens.push_back(oracle::strand_endpoints(c.m, letters(w)));
    auto brute = oracle::brute_orbits(c.m, gens);
    CHECK(static_cast<std::size_t>(inv.component_count) == brute.size());
    CHECK(brute == gen::label_components(c.m, g.labels));
  }
}

TEST_CASE("disk certification") {
  auto hoop = load("disk_hoop.chart");
  auto empty = load("disk_empty.chart");
  auto branch = load("disk_branch.chart");
  CHECK(certify_disk_equivalence(hoop, hoop).status == DiskCertificate::certified);
  CHECK(certify_disk_equivalence(branch, branch).status == DiskCertificate::certified);
  CHECK(certify_disk_equivalence(empty, hoop).status == DiskCertificate::certified);

  auto flipped = branch;
  flipped.edges[0].label = 1;
  std::swap(flipped.edges[0].from, flipped.edges[0].to);
  std::reverse(flipped.edges[0].via.begin(), flipped.edges[0].via.end());
  flipped.rotation["b"] = {{"e1", true}};
  REQUIRE(validate_chart(flipped).ok());
  auto res = certify_disk_equivalence(branch, flipped);
  CHECK(res.status == DiskCertificate::unknown);
  CHECK(res.note.find("boundary") != std::string::npos);

  CHECK_THROWS_AS(certify_disk_equivalence(branch, empty), ValidationError);
  try {
    certify_disk_equivalence(branch, empty);
  } catch (const ValidationError& e) {
    CHECK(e.invariant() == "boundary-marking");
  }
  CHECK_THROWS_AS(certify_disk_equivalence(load("two_branch_sphere.chart"), empty), UsageError);

  CHECK(to_string(boundary_word(branch)) == "B2: 1");
  CHECK(to_string(boundary_word(flipped)) == "B2: -1");
}
