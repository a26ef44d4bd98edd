#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "chartbraid/diagram.hpp"
#include "chartbraid/error.hpp"

namespace chartbraid {

namespace {

using RegionPair = std::pair<std::string, std::string>;

RegionPair ordered(const std::string& a, const std::string& b) { return a < b ? RegionPair{a, b} : RegionPair{b, a}; }

struct ComplexChecker {
  const DiagramComplex& c;
  ValidationReport report;
  std::set<RegionPair> adjacent;

  void fail(std::string clause, std::string element, std::string message) {
    report.violations.push_back({std::move(clause), std::move(element), std::move(message)});
  }

  template <class T, class Id>
  void unique(const std::vector<T>& items, Id id, const char* what) {
    std::set<std::string> seen;
    for (const auto& item : items) {
      if (!seen.insert(id(item)).second) fail("reference", id(item), std::string("duplicate ") + what + " id");
    }
  }

  bool sheet_ok(const std::string& element, const std::string& id) {
    if (c.find_sheet(id)) return true;
    fail("reference", element, "unknown 2-cell '" + id + "'");
    return false;
  }

  void check_ids() {
    unique(c.regions, [](const Region& r) { return r.id; }, "region");
    unique(c.sheets, [](const Sheet& s) { return s.id; }, "2-cell");
    unique(c.curves, [](const DoubleCurve& k) { return k.id; }, "double curve");
    unique(c.branch_points, [](const BranchPoint& b) { return b.id; }, "branch point");
    unique(c.triple_points, [](const TriplePoint& t) { return t.id; }, "triple point");
    unique(c.ports, [](const Port& p) { return p.name; }, "port");
  }

  void check_regions() {
    for (const auto& s : c.sheets) {
      bool ok = true;
      for (const auto* r : {&s.front, &s.back}) {
        if (!c.find_region(*r)) {
          fail("reference", s.id, "unknown region '" + *r + "'");
          ok = false;
        }
      }
      if (!ok) continue;
      if (s.front == s.back) {
        fail("region", s.id, "the same region lies on both sides");
        continue;
      }
      adjacent.insert(ordered(s.front, s.back));
    }
    std::set<RegionPair> declared;
    for (const auto& r : c.regions) {
      for (const auto& a : r.adjacent) {
        if (!c.find_region(a)) {
          fail("reference", r.id, "unknown adjacent region '" + a + "'");
          continue;
        }
        declared.insert(ordered(r.id, a));
        const auto* other = c.find_region(a);
        if (std::find(other->adjacent.begin(), other->adjacent.end(), r.id) == other->adjacent.end()) {
          fail("region", r.id, "adjacency with '" + a + "' is not symmetric");
        }
      }
    }
    for (const auto& p : adjacent) {
      if (!declared.count(p)) fail("region", p.first, "separated from '" + p.second + "' by a 2-cell but not declared adjacent");
    }
    for (const auto& p : declared) {
      if (!adjacent.count(p)) fail("region", p.first, "declared adjacent to '" + p.second + "' but no 2-cell separates them");
    }
  }

  bool adjacent_regions(const std::string& a, const std::string& b) const { return adjacent.count(ordered(a, b)) > 0; }

  /// The two cells of one level of a double curve: their normal sides are two
  /// quadrants separated by the other sheet, and the same holds for the far
  /// sides.
  void check_level(const DoubleCurve& k, const Sheet& l, const Sheet& r, const char* level) {
    if (l.id == r.id) {
      fail("dcurve", k.id, std::string(level) + " cells coincide");
      return;
    }
    auto check = [&](const std::string& a, const std::string& b, const char* side) {
      if (a == b) {
        fail("dcurve", k.id, std::string(level) + " cells have the same " + side + " region");
      } else if (!adjacent_regions(a, b)) {
        fail("dcurve", k.id, std::string(level) + " " + side + " regions are not adjacent");
      }
    };
    check(l.normal_side(), r.normal_side(), "normal-side");
    check(l.other_side(), r.other_side(), "far-side");
  }

  void check_curves() {
    std::map<std::string, int> branch_uses;
    std::map<std::string, int> port_uses;
    for (const auto& k : c.curves) {
      bool refs = true;
      for (const auto* s : {&k.over_left, &k.over_right, &k.under_left, &k.under_right}) refs = sheet_ok(k.id, *s) && refs;
      bool branch_end = false;
      if (!k.closed) {
        for (int e = 0; e < 2; ++e) {
          const auto& end = k.ends[e];
          switch (end.kind) {
            case CurveEndKind::dangling:
              fail("dcurve-end", k.id, "end " + std::to_string(e) + " dangles; a double curve ends at branch points, triple points or the patch boundary");
              break;
            case CurveEndKind::branch:
              if (!c.find_branch_point(end.ref)) {
                fail("reference", k.id, "unknown branch point '" + end.ref + "'");
              } else {
                ++branch_uses[end.ref];
              }
              branch_end = true;
              break;
            case CurveEndKind::triple:
              if (!c.find_triple_point(end.ref)) fail("reference", k.id, "unknown triple point '" + end.ref + "'");
              break;
            case CurveEndKind::port: {
              const auto* p = c.find_port(end.ref);
              if (!p) {
                fail("reference", k.id, "unknown port '" + end.ref + "'");
              } else if (p->kind != PortKind::dcurve) {
                fail("port", k.id, "port '" + end.ref + "' is an arc port");
              } else {
                ++port_uses[end.ref];
              }
              break;
            }
          }
        }
      }
      if (!refs) continue;
      const auto& ol = *c.find_sheet(k.over_left);
      const auto& orr = *c.find_sheet(k.over_right);
      const auto& ul = *c.find_sheet(k.under_left);
      const auto& ur = *c.find_sheet(k.under_right);
      if (branch_end && (ol.id != ur.id || orr.id != ul.id)) {
        fail("bpoint", k.id, "at a branch point the left over cell is the right under cell and vice versa");
      }
      check_level(k, ol, orr, "over");
      check_level(k, ul, ur, "under");
      std::set<std::string> over_regions{ol.front, ol.back, orr.front, orr.back};
      std::set<std::string> under_regions{ul.front, ul.back, ur.front, ur.back};
      if (over_regions != under_regions) fail("dcurve", k.id, "over and under cells do not bound the same quadrants");
    }
    for (const auto& b : c.branch_points) {
      if (branch_uses[b.id] != 1) {
        fail("bpoint", b.id, "a branch point ends exactly one double curve, found " + std::to_string(branch_uses[b.id]));
      }
    }
    for (const auto& p : c.ports) {
      if (p.kind != PortKind::dcurve) continue;
      if (port_uses[p.name] != 1) {
        fail("port", p.name, "a dcurve port ends exactly one double curve, found " + std::to_string(port_uses[p.name]));
      }
    }
  }

  void check_triple_points() {
    for (const auto& t : c.triple_points) {
      if (t.germs.size() != 6) {
        fail("tpoint", t.id, "expected 6 germs, found " + std::to_string(t.germs.size()));
        continue;
      }
      std::map<LevelPair, int> per_pair;
      std::set<std::pair<std::string, int>> seen;
      bool ok = true;
      for (const auto& g : t.germs) {
        ++per_pair[g.levels];
        const auto* k = c.find_curve(g.curve);
        if (!k) {
          fail("reference", t.id, "unknown double curve '" + g.curve + "'");
          ok = false;
          continue;
        }
        if (!seen.insert({g.curve, g.end}).second) fail("tpoint", t.id, "germ " + g.curve + "." + std::to_string(g.end) + " listed twice");
        if (k->closed || k->ends[g.end].kind != CurveEndKind::triple || k->ends[g.end].ref != t.id) {
          fail("tpoint", t.id, "double curve " + g.curve + " does not end here at end " + std::to_string(g.end));
          ok = false;
        }
      }
      for (LevelPair lp : {LevelPair::top_middle, LevelPair::top_bottom, LevelPair::middle_bottom}) {
        if (per_pair[lp] != 2) {
          fail("tpoint", t.id, "expected two germs between levels " + std::string(to_string(lp)));
          ok = false;
        }
      }
      for (const auto& k : c.curves) {
        if (k.closed) continue;
        for (int e = 0; e < 2; ++e) {
          if (k.ends[e].kind == CurveEndKind::triple && k.ends[e].ref == t.id && !seen.count({k.id, e})) {
            fail("tpoint", t.id, "double curve " + k.id + " ends here but is not listed as a germ");
          }
        }
      }
      if (!ok) continue;
      // Every quadrant of a level is bounded by one germ of each pair on that level.
      std::map<std::string, std::set<std::string>> cells;  // "<pair>.<over|under>" -> cells
      for (const auto& g : t.germs) {
        const auto* k = c.find_curve(g.curve);
        auto key = std::string(to_string(g.levels));
        cells[key + ".over"].insert({k->over_left, k->over_right});
        cells[key + ".under"].insert({k->under_left, k->under_right});
      }
      if (cells["tm.over"] != cells["tb.over"]) fail("tpoint", t.id, "top cells differ between the tm and tb germs");
      if (cells["tm.under"] != cells["mb.over"]) fail("tpoint", t.id, "middle cells differ between the tm and mb germs");
      if (cells["tb.under"] != cells["mb.under"]) fail("tpoint", t.id, "bottom cells differ between the tb and mb germs");
    }
  }

  void check_ports() {
    std::map<std::string, int> arc_uses;
    for (const auto& s : c.sheets) {
      for (const auto& b : s.boundary) {
        const auto* p = c.find_port(b);
        if (!p) {
          fail("reference", s.id, "unknown port '" + b + "'");
        } else if (p->kind != PortKind::arc) {
          fail("port", s.id, "port '" + b + "' is a dcurve port");
        } else {
          ++arc_uses[b];
        }
      }
    }
    for (const auto& p : c.ports) {
      if (p.kind == PortKind::arc) {
        if (arc_uses[p.name] != 1) {
          fail("port", p.name, "an arc port bounds exactly one 2-cell, found " + std::to_string(arc_uses[p.name]));
        }
        continue;
      }
      const DoubleCurve* curve = nullptr;
      for (const auto& k : c.curves) {
        if (k.closed) continue;
        for (const auto& e : k.ends) {
          if (e.kind == CurveEndKind::port && e.ref == p.name) curve = &k;
        }
      }
      if (!curve) continue;  // reported by check_curves
      const std::pair<const std::string*, const std::string*> around[] = {
          {&p.over_left, &curve->over_left},
          {&p.over_right, &curve->over_right},
          {&p.under_left, &curve->under_left},
          {&p.under_right, &curve->under_right}};
      for (const auto& [arc, cell] : around) {
        const auto* s = c.find_sheet(*cell);
        if (!s) continue;
        if (std::find(s->boundary.begin(), s->boundary.end(), *arc) == s->boundary.end()) {
          fail("port", p.name, "arc '" + *arc + "' is not on the boundary of 2-cell '" + *cell + "'");
        }
      }
    }
  }
};

[[noreturn]] void site_error(const std::string& what) { throw ValidationError("site", what); }

std::vector<const DoubleCurve*> curves_at(const DiagramComplex& c, CurveEndKind kind, const std::string& id) {
  std::vector<const DoubleCurve*> out;
  for (const auto& k : c.curves) {
    if (k.closed) continue;
    for (const auto& e : k.ends) {
      if (e.kind == kind && e.ref == id) out.push_back(&k);
    }
  }
  return out;
}

/// Word read by a small loop around a triple point on one level: one C^+-1
/// per germ crossed. Crossing from the left cell to the right cell of the
/// germ's line reads C, the other way C^-1. A germ pointing the same way as
/// its partner is counted against the line.
std::optional<BraidWord> triple_ring_word(const DiagramComplex& c, const TriplePoint& t, int level, int m) {
  struct Crossing {
    const Germ* germ;
    std::string left, right;
    int orientation;
  };
  std::vector<Crossing> ring;
  std::map<LevelPair, const Germ*> first;
  for (const auto& g : t.germs) {
    const auto* k = c.find_curve(g.curve);
    bool over;
    if (level == 0) {
      if (g.levels == LevelPair::middle_bottom) continue;
      over = true;
    } else if (level == 1) {
      if (g.levels == LevelPair::top_bottom) continue;
      over = g.levels == LevelPair::middle_bottom;
    } else {
      if (g.levels == LevelPair::top_middle) continue;
      over = false;
    }
    int orientation = 1;
    auto it = first.find(g.levels);
    if (it == first.end()) {
      first.emplace(g.levels, &g);
    } else if (it->second->end == g.end) {
      orientation = -1;
    }
    ring.push_back({&g, over ? k->over_left : k->under_left, over ? k->over_right : k->under_right, orientation});
  }
  std::set<std::string> cells;
  for (const auto& x : ring) cells.insert({x.left, x.right});
  if (ring.size() != 4 || cells.size() != 4) return std::nullopt;
  // Walk the 4-cycle of cells.
  auto s = standard_words(m);
  BraidWord word(2 * m);
  std::string cell = ring[0].left;
  std::vector<bool> used(4, false);
  LevelPair last = ring[0].germ->levels;
  bool first_step = true;
  for (int step = 0; step < 4; ++step) {
    int pick = -1;
    for (int k = 0; k < 4; ++k) {
      if (used[k] || (ring[k].left != cell && ring[k].right != cell)) continue;
      if (!first_step && ring[k].germ->levels == last) continue;
      pick = k;
      break;
    }
    if (pick < 0) return std::nullopt;
    used[pick] = true;
    const auto& x = ring[pick];
    int sign = (x.left == cell ? 1 : -1) * x.orientation;
    word *= sign > 0 ? s.c : s.c.inverse();
    cell = x.left == cell ? x.right : x.left;
    last = x.germ->levels;
    first_step = false;
  }
  if (cell != ring[0].left) return std::nullopt;
  return word;
}

}  // namespace

ValidationReport validate_complex(const DiagramComplex& c) {
  ComplexChecker k{c, {}, {}};
  k.check_ids();
  k.check_regions();
  k.check_curves();
  k.check_triple_points();
  k.check_ports();
  return k.report;
}

std::map<std::string, int> checkerboard(const DiagramComplex& c) {
  std::map<std::string, std::vector<std::string>> graph;
  for (const auto& r : c.regions) graph[r.id];
  for (const auto& s : c.sheets) {
    if (!graph.count(s.front) || !graph.count(s.back)) {
      throw ValidationError("reference", "2-cell " + s.id + " names an unknown region");
    }
    graph[s.front].push_back(s.back);
    graph[s.back].push_back(s.front);
  }
  std::map<std::string, int> color;
  for (const auto& r : c.regions) {
    if (color.count(r.id)) continue;
    color[r.id] = 0;
    std::deque<std::string> queue{r.id};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (const auto& v : graph[u]) {
        auto it = color.find(v);
        if (it == color.end()) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (it->second == color[u]) {
          throw ValidationError("checkerboard", "odd cycle of adjacent regions through " + u + " and " + v);
        }
      }
    }
  }
  return color;
}

ParityReport loop_parity(const DiagramComplex& c, const std::vector<std::string>& loop) {
  if (loop.empty() || loop.size() % 2 == 0 || loop.front() != loop.back()) {
    throw UsageError("a loop reads <cell> <curve> <cell> ... and returns to its first cell");
  }
  std::optional<std::map<std::string, int>> colors;
  try {
    colors = checkerboard(c);
  } catch (const ValidationError&) {
  }
  ParityReport out;
  out.color_changes = colors ? 0 : -1;
  for (std::size_t k = 0; k + 2 < loop.size(); k += 2) {
    const auto* a = c.find_sheet(loop[k]);
    const auto* b = c.find_sheet(loop[k + 2]);
    const auto* d = c.find_curve(loop[k + 1]);
    if (!a || !b || !d) throw ValidationError("reference", "unknown cell or curve near step " + std::to_string(k / 2 + 1));
    auto across = [&](const std::string& l, const std::string& r) {
      return (a->id == l && b->id == r) || (a->id == r && b->id == l);
    };
    if (!across(d->over_left, d->over_right) && !across(d->under_left, d->under_right)) {
      throw ValidationError("transverse", "step " + std::to_string(k / 2 + 1) + " does not cross " + d->id +
                                              " between the two cells of one level");
    }
    ++out.crossings;
    if (colors && colors->at(a->normal_side()) != colors->at(b->normal_side())) ++out.color_changes;
  }
  return out;
}

namespace {

/// Every chart end at each degree-2 vertex: (sheet, edge, true for the
/// edge's `to` end).
struct D2End {
  std::string sheet;
  const ChartEdge* edge;
  bool incoming;
};

std::map<std::string, std::vector<D2End>> degree2_ends(const DiagramChart& chart) {
  std::map<std::string, std::vector<D2End>> out;
  for (const auto& v : chart.degree2) out[v.id];
  for (const auto& f : chart.fragments) {
    for (const auto& e : f.edges) {
      if (!e.from.on_boundary() && out.count(e.from.vertex)) out[e.from.vertex].push_back({f.sheet, &e, false});
      if (!e.to.on_boundary() && out.count(e.to.vertex)) out[e.to.vertex].push_back({f.sheet, &e, true});
    }
  }
  return out;
}

}  // namespace

ValidationReport validate_diagram_chart(const DiagramComplex& c, const DiagramChart& chart) {
  ValidationReport report;
  auto fail = [&](std::string clause, std::string element, std::string message) {
    report.violations.push_back({std::move(clause), std::move(element), std::move(message)});
  };
  if (chart.m < 1) {
    fail("label", "chart", "m must be positive");
    return report;
  }
  std::set<std::string> d2_ids;
  for (const auto& v : chart.degree2) {
    if (!d2_ids.insert(v.id).second) fail("reference", v.id, "duplicate degree-2 vertex id");
    if (!c.find_curve(v.curve)) fail("reference", v.id, "unknown double curve '" + v.curve + "'");
    if (v.label < 1 || v.label > chart.m - 1) fail("label", v.id, "label outside 1.." + std::to_string(chart.m - 1));
  }
  for (const auto& f : chart.fragments) {
    const auto* sheet = c.find_sheet(f.sheet);
    if (!sheet) {
      fail("reference", f.sheet, "chart drawn on an unknown 2-cell");
      continue;
    }
    // The fragment as a disk chart: degree-2 vertices and patch-boundary ends
    // become distinct boundary punctures.
    Chart local;
    local.m = chart.m;
    local.schema = SurfaceSchema::disk();
    local.vertices = f.vertices;
    local.rotation = f.rotation;
    std::size_t punctures = 0;
    for (const auto& e : f.edges) {
      for (const auto* p : {&e.from, &e.to}) {
        if (p->on_boundary() || d2_ids.count(p->vertex)) ++punctures;
      }
    }
    std::size_t next = 0;
    auto puncture = [&](const ChartEdge& e, const Endpoint& p) {
      if (p.on_boundary()) {
        if (p.boundary.segment >= static_cast<int>(sheet->boundary.size())) {
          fail("reference", f.sheet + "/" + e.id, "boundary index past the 2-cell's port list");
        }
        if (!(p.boundary.offset > 0 && p.boundary.offset < 1)) {
          fail("boundary", f.sheet + "/" + e.id, "boundary offset must lie in (0,1)");
        }
      } else if (!d2_ids.count(p.vertex)) {
        return p;
      }
      ++next;
      return Endpoint::at_boundary(0, static_cast<double>(next) / static_cast<double>(punctures + 1));
    };
    for (const auto& v : f.vertices) {
      if (d2_ids.count(v.id)) fail("reference", f.sheet + "/" + v.id, "vertex id reused by a degree-2 vertex");
    }
    for (const auto& e : f.edges) {
      ChartEdge local_edge = e;
      local_edge.from = puncture(e, e.from);
      local_edge.to = puncture(e, e.to);
      local.edges.push_back(std::move(local_edge));
    }
    for (auto v : validate_chart(local).violations) {
      v.element = f.sheet + "/" + v.element;
      report.violations.push_back(std::move(v));
    }
  }
  std::set<std::string> seen_edges;
  for (const auto& f : chart.fragments) {
    for (const auto& e : f.edges) {
      if (!seen_edges.insert(e.id).second) fail("reference", f.sheet + "/" + e.id, "edge id used on two 2-cells");
    }
  }
  auto ends = degree2_ends(chart);
  for (const auto& v : chart.degree2) {
    const auto* k = c.find_curve(v.curve);
    if (!k) continue;
    const auto& here = ends[v.id];
    if (here.size() != 2) {
      fail("degree2", v.id, "expected one chart edge on each side of the double curve, found " + std::to_string(here.size()) + " ends");
      continue;
    }
    if (here[0].incoming == here[1].incoming) fail("degree2", v.id, "the edge does not continue through the double curve");
    for (const auto& end : here) {
      if (end.edge->label != v.label) {
        fail("degree2", v.id, "edge " + end.edge->id + " has label " + std::to_string(end.edge->label) +
                                  " but the crossing carries " + std::to_string(v.label));
      }
    }
    const auto& l = v.over ? k->over_left : k->under_left;
    const auto& r = v.over ? k->over_right : k->under_right;
    bool sides = (here[0].sheet == l && here[1].sheet == r) || (here[0].sheet == r && here[1].sheet == l);
    if (!sides) {
      fail("degree2", v.id, std::string("ends are not on the two ") + (v.over ? "over" : "under") + " cells of " + k->id);
    }
  }
  return report;
}

int degree2_sign(const DiagramComplex& c, const DiagramChart& chart, const Degree2Vertex& v) {
  const auto* k = c.find_curve(v.curve);
  if (!k) throw UsageError("unknown double curve " + v.curve);
  auto ends = degree2_ends(chart)[v.id];
  const D2End* in = nullptr;
  const D2End* out = nullptr;
  for (const auto& e : ends) (e.incoming ? in : out) = &e;
  if (ends.size() != 2 || !in || !out) throw ValidationError("degree2", "no edge runs through " + v.id);
  const auto& l = v.over ? k->over_left : k->under_left;
  const auto& r = v.over ? k->over_right : k->under_right;
  if (in->sheet == l && out->sheet == r) return 1;
  if (in->sheet == r && out->sheet == l) return -1;
  throw ValidationError("degree2", v.id + " does not cross between the cells of one level");
}

std::string_view to_string(SiteKind kind) {
  switch (kind) {
    case SiteKind::regular: return "regular";
    case SiteKind::double_curve: return "double_curve";
    case SiteKind::branch_point: return "branch_point";
    case SiteKind::triple_point_disk: return "triple_point_disk";
  }
  return "?";
}

LocalLift local_lift(const DiagramComplex& c, std::string_view site, const DiagramChart& chart) {
  auto colon = site.find(':');
  if (colon == std::string_view::npos) throw UsageError("site must be sheet:<id>, dcurve:<id>, bpoint:<id> or tpoint:<id>");
  auto kind = site.substr(0, colon);
  std::string id(site.substr(colon + 1));
  int m = chart.m;
  if (m < 1) throw UsageError("m must be positive");
  LocalLift out;
  out.m = m;
  auto words = standard_words(m);
  if (kind == "sheet") {
    if (!c.find_sheet(id)) throw UsageError("unknown 2-cell " + id);
    const auto* f = chart.find_fragment(id);
    if (f && !f->vertices.empty()) site_error("chart vertex " + f->vertices.front().id + " lies on the site");
    out.kind = SiteKind::regular;
    out.words.push_back(BraidWord(m));
    out.verified = true;
    return out;
  }
  if (kind == "dcurve") {
    const auto* k = c.find_curve(id);
    if (!k) throw UsageError("unknown double curve " + id);
    out.kind = SiteKind::double_curve;
    out.words.push_back(words.c);
    out.double_curve_count = static_cast<long long>(m) * (2 * m - 1);
    out.verified = true;
    for (const auto& v : chart.degree2) {
      if (v.curve != id) continue;
      int sign = degree2_sign(c, chart, v);
      auto report = v.over ? verify_double_curve_identities(m, v.label, sign)
                           : verify_lower_sheet_identities(m, v.label, sign);
      out.chains.push_back(report.chain);
      out.chain_names.push_back(v.id);
      out.verified = out.verified && report.passed();
    }
    return out;
  }
  if (kind == "bpoint") {
    const auto* b = c.find_branch_point(id);
    if (!b) throw UsageError("unknown branch point " + id);
    if (curves_at(c, CurveEndKind::branch, id).size() != 1) site_error("branch point " + id + " ends no double curve");
    out.kind = SiteKind::branch_point;
    auto report = verify_branch_point_collapse(m);
    auto chain = report.chain;
    if (b->sign < 0) std::reverse(chain.begin(), chain.end());
    out.words.push_back(words.c);
    out.chains.push_back(chain);
    out.chain_names.push_back(id);
    out.double_curve_count = static_cast<long long>(m) * (2 * m - 1);
    out.lifted_branch_points = m;
    out.verified = report.passed();
    return out;
  }
  if (kind == "tpoint") {
    const auto* t = c.find_triple_point(id);
    if (!t) throw UsageError("unknown triple point " + id);
    auto report = validate_complex(c);
    for (const auto& v : report.violations) {
      if (v.element == id || v.clause == "reference") throw ValidationError(v.clause, v.element + ": " + v.message);
    }
    out.kind = SiteKind::triple_point_disk;
    for (int level = 0; level < 3; ++level) {
      auto word = triple_ring_word(c, *t, level, m);
      if (!word) continue;
      out.words.push_back(*word);
      out.double_curve_count = static_cast<long long>(word->size());
      out.verified = is_trivial(*word, WordProblemMethod::cross_checked);
      return out;
    }
    throw ValidationError("tpoint", "no level around " + id + " has four distinct quadrant cells");
  }
  throw UsageError("unsupported site kind '" + std::string(kind) + "'");
}

std::int64_t braid_index_bound(std::int64_t m, std::int64_t companion_braid_index) {
  if (m < 1 || companion_braid_index < 1) throw UsageError("degree and braid index must be positive");
  if (m > std::numeric_limits<std::int64_t>::max() / companion_braid_index) throw ResourceError("bound overflows 64 bits");
  return m * companion_braid_index;
}

std::vector<std::string> interface_lines(const Diagram& d) {
  const auto& c = d.complex;
  std::vector<std::string> out;
  for (const auto& p : c.ports) {
    if (p.kind == PortKind::arc) {
      const Sheet* owner = nullptr;
      int index = -1;
      for (const auto& s : c.sheets) {
        auto it = std::find(s.boundary.begin(), s.boundary.end(), p.name);
        if (it != s.boundary.end()) {
          owner = &s;
          index = static_cast<int>(it - s.boundary.begin());
        }
      }
      std::vector<std::pair<double, std::string>> ends;
      if (owner && d.chart) {
        if (const auto* f = d.chart->find_fragment(owner->id)) {
          for (const auto& e : f->edges) {
            for (const auto* q : {&e.from, &e.to}) {
              if (!q->on_boundary() || q->boundary.segment != index) continue;
              ends.emplace_back(q->boundary.offset, format_number(q->boundary.offset) + ":" + std::to_string(e.label) +
                                                        ":" + (q == &e.from ? "in" : "out"));
            }
          }
        }
      }
      std::sort(ends.begin(), ends.end());
      std::string line = "arc " + p.name + " " + (owner && owner->orientation < 0 ? "-" : "+") + " ends=";
      for (std::size_t k = 0; k < ends.size(); ++k) line += (k ? "," : "") + ends[k].second;
      out.push_back(line);
    } else {
      std::string dir = "?";
      for (const auto& k : c.curves) {
        if (k.closed) continue;
        for (int e = 0; e < 2; ++e) {
          if (k.ends[e].kind == CurveEndKind::port && k.ends[e].ref == p.name) dir = e == 0 ? "in" : "out";
        }
      }
      out.push_back("dcurve " + p.name + " " + dir + " over=" + p.over_left + "/" + p.over_right + " under=" +
                    p.under_left + "/" + p.under_right);
    }
  }
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    auto name = [](const std::string& s) {
      auto p = s.find(' ');
      return s.substr(p + 1, s.find(' ', p + 1) - p - 1);
    };
    return name(a) < name(b);
  });
  return out;
}

}  // namespace chartbraid
