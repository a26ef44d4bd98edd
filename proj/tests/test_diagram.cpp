#include <filesystem>
#include <random>

#include "chartbraid/diagram.hpp"
#include "chartbraid/error.hpp"
#include "diagram_gen.hpp"
#include "doctest.h"

using namespace chartbraid;

namespace {

namespace fs = std::filesystem;

Diagram load(const std::string& name) {
  return parse_diagram(gen::slurp(fs::path(CHARTBRAID_DATA_DIR) / "diagrams" / name));
}

Sheet* sheet(Diagram& d, const std::string& id) {
  for (auto& s : d.complex.sheets) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

DoubleCurve* curve(Diagram& d, const std::string& id) {
  for (auto& k : d.complex.curves) {
    if (k.id == id) return &k;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("shipped diagrams round trip") {
  int n = 0;
  for (const auto& entry : fs::directory_iterator(fs::path(CHARTBRAID_DATA_DIR) / "diagrams")) {
    auto text = gen::slurp(entry.path());
    CHECK_MESSAGE(serialize(parse_diagram(text)) == text, entry.path().filename().string());
    ++n;
  }
  CHECK(n >= 8);
}

TEST_CASE("diagram parse errors carry positions") {
  struct Case {
    const char* text;
    std::size_t line, column;
  };
  const Case cases[] = {
      {"region a adj=b\n", 1, 1},
      {"complex\nsheet s * front=a back=b\n", 2, 9},
      {"complex\ndcurve d over=a under=c/d ends=closed\n", 2, 10},
      {"complex\ndcurve d over=a/b under=c/d ends=x:y,-\n", 2, 29},
      {"complex\ntpoint t d.2:tm\n", 2, 10},
      {"complex\nport p wire\n", 2, 8},
      {"complex\nchart m=2\non-sheet s\nv b black at 1,2\n", 4, 11},
      {"complex\nchart m=2\nv b black\n", 3, 1},
      {"complex\nchart m=2\nd2 x curve=d label=1 level=side\n", 3, 22},
      {"complex\nbogus\n", 2, 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    try {
      parse_diagram(c.text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == c.line);
      CHECK(e.column() == c.column);
    }
  }
}

TEST_CASE("complex validation examples") {
  CHECK(validate_complex(load("embedded_sphere.diagram").complex).ok());
  CHECK(validate_complex(load("sphere_double_circle.diagram").complex).ok());
  CHECK(validate_complex(load("triple_point.diagram").complex).ok());
  CHECK(validate_complex(load("crossing_edge.diagram").complex).ok());
  CHECK(validate_complex(load("odd_region_cycle.diagram").complex).ok());
  auto dangling = validate_complex(load("dangling_curve.diagram").complex);
  CHECK_FALSE(dangling.ok());
  CHECK(dangling.has_clause("dcurve-end"));
}

TEST_CASE("seeded complex corruptions are caught") {
  auto base = load("triple_point.diagram");
  REQUIRE(validate_complex(base.complex).ok());
  struct Mutation {
    const char* clause;
    void (*apply)(Diagram&);
  };
  const Mutation cases[] = {
      {"reference", [](Diagram& d) { sheet(d, "Xpp")->front = "nowhere"; }},
      {"region", [](Diagram& d) { sheet(d, "Xpp")->back = "oppp"; }},
      {"region", [](Diagram& d) { d.complex.regions[0].adjacent.pop_back(); }},
      {"dcurve", [](Diagram& d) { curve(d, "zp")->over_right = "Xmp"; }},
      {"dcurve", [](Diagram& d) { curve(d, "zp")->under_left = "Zpp"; }},
      {"tpoint", [](Diagram& d) { d.complex.triple_points[0].germs.pop_back(); }},
      {"tpoint", [](Diagram& d) { d.complex.triple_points[0].germs[0].levels = LevelPair::middle_bottom; }},
      {"port", [](Diagram& d) { sheet(d, "Ypp")->boundary.push_back("xpp"); }},
      {"port", [](Diagram& d) { d.complex.ports[0].over_left = "zmm"; }},
      {"reference", [](Diagram& d) { d.complex.sheets.push_back(d.complex.sheets[0]); }},
      {"dcurve-end", [](Diagram& d) { curve(d, "xn")->ends[1] = {CurveEndKind::dangling, ""}; }},
  };
  for (const auto& m : cases) {
    auto d = base;
    m.apply(d);
    auto r = validate_complex(d.complex);
    CAPTURE(m.clause);
    CAPTURE(r.summary());
    CHECK(r.has_clause(m.clause));
  }
  auto sphere = load("sphere_double_circle.diagram");
  curve(sphere, "d")->ends = {CurveEnd{CurveEndKind::branch, "b"}, CurveEnd{CurveEndKind::branch, "c"}};
  curve(sphere, "d")->closed = false;
  sphere.complex.branch_points = {{"b", 1}, {"c", -1}};
  CHECK(validate_complex(sphere.complex).has_clause("bpoint"));
}

TEST_CASE("checkerboard coloring") {
  auto sphere = checkerboard(load("embedded_sphere.diagram").complex);
  CHECK(sphere.at("inside") != sphere.at("outside"));
  auto circle = checkerboard(load("sphere_double_circle.diagram").complex);
  CHECK(circle.at("O") == 0);
  CHECK(circle.at("I") == 1);
  CHECK(circle.at("P") == 1);
  auto octants = checkerboard(load("triple_point.diagram").complex);
  CHECK(octants.at("oppp") != octants.at("oppm"));
  CHECK(octants.at("oppp") == octants.at("ommp"));
  CHECK_THROWS_AS(checkerboard(load("odd_region_cycle.diagram").complex), ValidationError);
  try {
    checkerboard(load("odd_region_cycle.diagram").complex);
  } catch (const ValidationError& e) {
    CHECK(e.invariant() == "checkerboard");
  }
}

TEST_CASE("loop parity") {
  auto c = load("sphere_double_circle.diagram").complex;
  auto p = loop_parity(c, {"A", "d", "S", "d", "A"});
  CHECK(p.crossings == 2);
  CHECK(p.even());
  CHECK(p.color_changes == 2);
  CHECK(loop_parity(c, {"A"}).crossings == 0);
  CHECK_THROWS_AS(loop_parity(c, {"S", "d", "N", "d", "S"}), ValidationError);
  CHECK_THROWS_AS(loop_parity(c, {"A", "d", "S"}), UsageError);
  auto t = load("triple_point.diagram").complex;
  CHECK(loop_parity(t, {"Xpp", "zp", "Xmp", "yn", "Xmm", "zn", "Xpm", "yp", "Xpp"}).crossings == 4);
}

TEST_CASE("random closed loops cross double curves an even number of times") {
  std::mt19937 rng(17);
  for (const char* name : {"sphere_double_circle.diagram", "triple_point.diagram", "crossing_edge.diagram"}) {
    auto c = load(name).complex;
    for (int k = 0; k < 100; ++k) {
      auto loop = gen::random_loop(c, rng);
      auto p = loop_parity(c, loop);
      CHECK(p.even());
      // The loop pushed off to the normal side changes region color at
      // every crossing and returns to its start.
      CHECK(p.color_changes == p.crossings);
    }
  }
}

TEST_CASE("diagram chart validation") {
  auto sphere = load("embedded_sphere.diagram");
  REQUIRE(sphere.chart);
  CHECK(validate_diagram_chart(sphere.complex, *sphere.chart).ok());
  auto cross = load("crossing_edge.diagram");
  CHECK(validate_diagram_chart(cross.complex, *cross.chart).ok());
  auto closed = load("sphere_double_circle_chart.diagram");
  CHECK(validate_diagram_chart(closed.complex, *closed.chart).ok());
  auto bad = load("label_mismatch.diagram");
  auto r = validate_diagram_chart(bad.complex, *bad.chart);
  CHECK_FALSE(r.ok());
  CHECK(r.has_clause("degree2"));

  auto wrong_level = cross;
  wrong_level.chart->degree2[0].over = false;
  CHECK(validate_diagram_chart(wrong_level.complex, *wrong_level.chart).has_clause("degree2"));
  auto reversed = cross;
  reversed.chart->fragments[1].edges[0].from = Endpoint::at_boundary(0, 0.5);
  reversed.chart->fragments[1].edges[0].to = Endpoint::at_vertex("x");
  CHECK(validate_diagram_chart(reversed.complex, *reversed.chart).has_clause("degree2"));
  auto far = cross;
  far.chart->fragments[1].edges[0].to = Endpoint::at_boundary(3, 0.5);
  CHECK(validate_diagram_chart(far.complex, *far.chart).has_clause("reference"));
  auto stray = closed;
  stray.chart->fragments[0].edges[0].label = 2;
  auto sr = validate_diagram_chart(stray.complex, *stray.chart);
  CHECK(sr.has_clause("label"));
  CHECK(sr.has_clause("degree2"));
  auto lonely = closed;
  lonely.chart->fragments[1].vertices.push_back({"w", VertexKind::white, std::nullopt});
  CHECK(validate_diagram_chart(lonely.complex, *lonely.chart).has_clause("degree"));
}

TEST_CASE("local lifts") {
  auto cross = load("crossing_edge.diagram");
  DiagramChart empty;
  empty.m = 2;
  auto regular = local_lift(cross.complex, "sheet:Yu", empty);
  CHECK(regular.kind == SiteKind::regular);
  CHECK(regular.words.at(0) == BraidWord(2));

  auto dc = local_lift(cross.complex, "dcurve:d", empty);
  CHECK(dc.kind == SiteKind::double_curve);
  CHECK(dc.words.at(0).size() == 6);
  CHECK(dc.double_curve_count == 6);

  DiagramChart one;
  one.m = 1;
  CHECK(to_string(local_lift(cross.complex, "dcurve:d", one).words.at(0)) == "B2: 1");

  auto with_edge = local_lift(cross.complex, "dcurve:d", *cross.chart);
  REQUIRE(with_edge.chains.size() == 1);
  CHECK(degree2_sign(cross.complex, *cross.chart, cross.chart->degree2[0]) == 1);
  CHECK(with_edge.chains[0] == verify_double_curve_identities(2, 1, 1).chain);
  CHECK(with_edge.verified);

  auto under = cross;
  under.chart->degree2[0].over = false;
  under.chart->fragments[0].sheet = "Yu";
  under.chart->fragments[1].sheet = "Yd";
  auto lower = local_lift(under.complex, "dcurve:d", *under.chart);
  CHECK(lower.chains.at(0) == verify_lower_sheet_identities(2, 1, 1).chain);

  auto flipped = cross;
  std::swap(flipped.chart->fragments[0].sheet, flipped.chart->fragments[1].sheet);
  CHECK(degree2_sign(flipped.complex, *flipped.chart, flipped.chart->degree2[0]) == -1);

  auto chart_site = load("sphere_double_circle_chart.diagram");
  CHECK_THROWS_AS(local_lift(chart_site.complex, "sheet:A", *chart_site.chart), ValidationError);
  CHECK_THROWS_AS(local_lift(cross.complex, "edge:e1", empty), UsageError);

  auto t = load("triple_point.diagram");
  for (int m = 1; m <= 3; ++m) {
    DiagramChart ch;
    ch.m = m;
    auto tp = local_lift(t.complex, "tpoint:T", ch);
    CHECK(tp.kind == SiteKind::triple_point_disk);
    CHECK(tp.words.at(0).degree() == 2 * m);
    CHECK(tp.words.at(0).size() == static_cast<std::size_t>(4 * m * (2 * m - 1)));
    CHECK(tp.verified);
  }
}

TEST_CASE("branch point lift") {
  Diagram d = parse_diagram(
      "complex\n"
      "region U adj=L,K\nregion L adj=U\nregion K adj=U\n"
      "sheet Fo + front=U back=L bnd=a\nsheet Fi + front=K back=U\n"
      "dcurve d over=Fi/Fo under=Fo/Fi ends=b:b1,b:b2\n"
      "bpoint b1 sign=-\nbpoint b2 sign=+\nport a arc\n");
  REQUIRE(validate_complex(d.complex).ok());
  for (int m = 1; m <= 4; ++m) {
    DiagramChart ch;
    ch.m = m;
    auto pos = local_lift(d.complex, "bpoint:b2", ch);
    CHECK(pos.verified);
    CHECK(pos.lifted_branch_points == m);
    CHECK(pos.chains.at(0).back() == BraidWord(2 * m));
    CHECK(pos.chains.at(0).front() == standard_words(m).c);
    auto neg = local_lift(d.complex, "bpoint:b1", ch);
    CHECK(neg.chains.at(0).front() == BraidWord(2 * m));
    CHECK(neg.chains.at(0).back() == standard_words(m).c);
  }
}

TEST_CASE("braid index bound") {
  CHECK(braid_index_bound(3, 2) == 6);
  CHECK(braid_index_bound(1, 5) == 5);
  CHECK(braid_index_bound(2, 1) == 2);
  CHECK_THROWS_AS(braid_index_bound(0, 2), UsageError);
  CHECK_THROWS_AS(braid_index_bound(2, 0), UsageError);
  CHECK_THROWS_AS(braid_index_bound(std::int64_t{1} << 40, std::int64_t{1} << 40), ResourceError);
}

TEST_CASE("patch interface") {
  auto lines = interface_lines(load("crossing_edge.diagram"));
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "dcurve p1 in over=xl/xr under=yu/yd");
  CHECK(lines[1] == "dcurve p2 out over=xl/xr under=yu/yd");
  CHECK(lines[2] == "arc xl + ends=0.5:1:in");
  CHECK(lines[3] == "arc xr + ends=0.5:1:out");
  CHECK(lines[4] == "arc yd + ends=");
}
