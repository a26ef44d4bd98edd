#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "chartbraid/chart.hpp"
#include "chartbraid/error.hpp"
#include "geometry.hpp"

namespace chartbraid {

using namespace detail;

SurfaceSchema::SurfaceSchema(int genus, bool disk) : genus_(genus), disk_(disk) {
  if (genus < 0) throw UsageError("genus must be non-negative");
  if (disk && genus != 0) throw UsageError("a disk schema has genus 0");
}

int SurfaceSchema::partner(int side) const {
  if (genus_ == 0) return -1;
  int base = side - side % 4;
  int r = side % 4;
  return base + (r + 2) % 4;
}

std::string SurfaceSchema::presentation() const {
  std::string s;
  for (int k = 1; k <= genus_; ++k) {
    if (k > 1) s += ' ';
    auto a = "a" + std::to_string(k);
    auto b = "b" + std::to_string(k);
    s += a + " " + b + " " + a + "^-1 " + b + "^-1";
  }
  return s;
}

Point SurfaceSchema::corner(int k) const {
  const int sides = side_count();
  k = ((k % sides) + sides) % sides;
  if (sides == 4) {
    static constexpr Point square[4] = {{-10, -10}, {10, -10}, {10, 10}, {-10, 10}};
    return square[k];
  }
  const double pi = std::numbers::pi;
  const double radius = 10.0 / std::cos(pi / sides);
  const double angle = -pi / 2 - pi / sides + 2 * pi * k / sides;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

Point SurfaceSchema::boundary_point(int side, double offset) const {
  Point a = corner(side);
  Point b = corner(side + 1);
  return {a.x + offset * (b.x - a.x), a.y + offset * (b.y - a.y)};
}

bool SurfaceSchema::strictly_inside(Point p) const {
  for (int k = 0; k < side_count(); ++k) {
    Point a = corner(k);
    Point b = corner(k + 1);
    if (cross(b - a, p - a) <= 1e-9) return false;
  }
  return true;
}

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::black: return "black";
    case VertexKind::white: return "white";
    case VertexKind::crossing: return "crossing";
    case VertexKind::free: return "free";
  }
  return "?";
}

const ChartVertex* Chart::find_vertex(std::string_view id) const {
  for (const auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

const ChartEdge* Chart::find_edge(std::string_view id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

bool Chart::has_geometry() const {
  if (vertices.empty()) return true;
  return std::all_of(vertices.begin(), vertices.end(), [](const auto& v) { return v.position.has_value(); });
}

std::vector<Point> Chart::polyline(const ChartEdge& e) const {
  auto position = [&](const Endpoint& p) -> Point {
    if (p.on_boundary()) return schema.boundary_point(p.boundary.segment, p.boundary.offset);
    const ChartVertex* v = find_vertex(p.vertex);
    if (!v || !v->position) throw UsageError("chart has no geometry for vertex '" + p.vertex + "'");
    return *v->position;
  };
  std::vector<Point> pts;
  pts.push_back(position(e.from));
  pts.insert(pts.end(), e.via.begin(), e.via.end());
  pts.push_back(position(e.to));
  return pts;
}

std::vector<EdgeEnd> Chart::incident_ends(std::string_view vertex) const {
  std::vector<EdgeEnd> ends;
  for (const auto& e : edges) {
    if (!e.from.on_boundary() && e.from.vertex == vertex) ends.push_back({e.id, true});
    if (!e.to.on_boundary() && e.to.vertex == vertex) ends.push_back({e.id, false});
  }
  return ends;
}

std::size_t Chart::count(VertexKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), [&](const auto& v) { return v.kind == kind; }));
}

bool ValidationReport::has_clause(std::string_view clause) const {
  return std::any_of(violations.begin(), violations.end(), [&](const auto& v) { return v.clause == clause; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "\n";
    s += v.clause + " [" + v.element + "]: " + v.message;
  }
  return s;
}

BraidWord circle_word(const Chart& chart, std::string_view vertex) {
  auto it = chart.rotation.find(std::string(vertex));
  if (it == chart.rotation.end()) throw UsageError("no rotation recorded for vertex '" + std::string(vertex) + "'");
  std::vector<int> letters;
  for (const auto& end : it->second) {
    const ChartEdge* e = chart.find_edge(end.edge);
    if (!e) throw UsageError("rotation of '" + std::string(vertex) + "' names unknown edge '" + end.edge + "'");
    letters.push_back(end.source ? -e->label : e->label);
  }
  return BraidWord(std::max(chart.m, 1), std::move(letters));
}

namespace {

struct Checker {
  const Chart& chart;
  ValidationReport report;

  void add(std::string clause, std::string element, std::string message) {
    report.violations.push_back({std::move(clause), std::move(element), std::move(message)});
  }

  int label_of(const std::string& edge) const {
    const ChartEdge* e = chart.find_edge(edge);
    return e ? e->label : 0;
  }

  bool labels_ok = true;

  void check_references() {
    std::set<std::string> ids;
    for (const auto& v : chart.vertices) {
      if (!ids.insert(v.id).second) add("reference", v.id, "duplicate vertex id");
    }
    std::set<std::string> edge_ids;
    for (const auto& e : chart.edges) {
      if (!edge_ids.insert(e.id).second) add("reference", e.id, "duplicate edge id");
      for (const Endpoint* p : {&e.from, &e.to}) {
        if (!p->on_boundary() && !chart.find_vertex(p->vertex)) {
          add("reference", e.id, "unknown vertex '" + p->vertex + "'");
        }
      }
      if (e.label < 1 || e.label > chart.m - 1) {
        add("label", e.id, "label " + std::to_string(e.label) + " outside 1.." + std::to_string(chart.m - 1));
        labels_ok = false;
      }
    }
    for (const auto& [vertex, ends] : chart.rotation) {
      if (!chart.find_vertex(vertex)) add("reference", vertex, "rotation for unknown vertex");
      for (const auto& end : ends) {
        if (!chart.find_edge(end.edge)) add("reference", vertex, "rotation names unknown edge '" + end.edge + "'");
      }
    }
  }

  void check_boundary() {
    const auto& schema = chart.schema;
    struct Use {
      const ChartEdge* edge;
      bool is_from;
      BoundaryPoint point;
    };
    std::vector<Use> uses;
    for (const auto& e : chart.edges) {
      if (e.from.on_boundary()) uses.push_back({&e, true, e.from.boundary});
      if (e.to.on_boundary()) uses.push_back({&e, false, e.to.boundary});
    }
    if (uses.empty()) return;
    if (schema.genus() == 0 && !schema.is_disk()) {
      for (const auto& u : uses) add("boundary", u.edge->id, "the sphere schema has no boundary to end on");
      return;
    }
    bool ranges_ok = true;
    for (const auto& u : uses) {
      if (u.point.segment < 0 || u.point.segment >= schema.side_count() || !(u.point.offset > 0) ||
          !(u.point.offset < 1)) {
        add("boundary", u.edge->id,
            "boundary point " + std::to_string(u.point.segment) + "," + format_number(u.point.offset) +
                " is not inside a polygon side");
        ranges_ok = false;
      }
    }
    if (!ranges_ok) return;
    auto same = [](BoundaryPoint a, BoundaryPoint b) {
      return a.segment == b.segment && std::abs(a.offset - b.offset) < 1e-9;
    };
    for (std::size_t a = 0; a < uses.size(); ++a) {
      for (std::size_t b = a + 1; b < uses.size(); ++b) {
        if (same(uses[a].point, uses[b].point)) {
          add("boundary", uses[a].edge->id, "two edge ends share a boundary point with " + uses[b].edge->id);
        }
      }
    }
    if (schema.is_disk()) return;
    for (const auto& u : uses) {
      BoundaryPoint mate{schema.partner(u.point.segment), 1 - u.point.offset};
      const Use* found = nullptr;
      for (const auto& v : uses) {
        if (same(v.point, mate)) found = &v;
      }
      if (!found) {
        add("boundary", u.edge->id, "no edge continues across the glued side at " + std::to_string(mate.segment) +
                                        "," + format_number(mate.offset));
        continue;
      }
      if (found->edge->label != u.edge->label) {
        add("boundary", u.edge->id, "label changes across the glued side (continues as " + found->edge->id + ")");
      }
      if (found->is_from == u.is_from) {
        add("boundary", u.edge->id, "orientation reverses across the glued side (continues as " + found->edge->id + ")");
      }
    }
  }

  bool rotation_ok(const ChartVertex& v, const std::vector<EdgeEnd>& incident) {
    auto it = chart.rotation.find(v.id);
    if (it == chart.rotation.end()) {
      if (!incident.empty()) add("rotation", v.id, "missing rotation");
      return incident.empty();
    }
    auto listed = it->second;
    auto sorted_listed = listed;
    auto sorted_incident = incident;
    auto key = [](const EdgeEnd& e) { return std::pair(e.edge, e.source); };
    auto less = [&](const EdgeEnd& a, const EdgeEnd& b) { return key(a) < key(b); };
    std::sort(sorted_listed.begin(), sorted_listed.end(), less);
    std::sort(sorted_incident.begin(), sorted_incident.end(), less);
    if (sorted_listed != sorted_incident) {
      add("rotation", v.id, "rotation does not list exactly the incident edge-ends");
      return false;
    }
    return true;
  }

  void check_vertices() {
    for (const auto& v : chart.vertices) {
      auto incident = chart.incident_ends(v.id);
      const std::size_t degree = incident.size();
      std::size_t expected = 0;
      switch (v.kind) {
        case VertexKind::black: expected = 1; break;
        case VertexKind::crossing: expected = 4; break;
        case VertexKind::white: expected = 6; break;
        case VertexKind::free: expected = 2; break;
      }
      if (degree != expected) {
        add("degree", v.id,
            std::string(to_string(v.kind)) + " vertex has degree " + std::to_string(degree) + ", expected " +
                std::to_string(expected));
        continue;
      }
      if (!rotation_ok(v, incident) || !labels_ok) continue;
      const auto& rot = chart.rotation.at(v.id);
      std::vector<int> labels;
      for (const auto& end : rot) labels.push_back(label_of(end.edge));
      bool template_ok = true;
      if (v.kind == VertexKind::crossing) {
        for (int k = 0; k < 2; ++k) {
          const auto& a = rot[static_cast<std::size_t>(k)];
          const auto& b = rot[static_cast<std::size_t>(k + 2)];
          if (labels[static_cast<std::size_t>(k)] != labels[static_cast<std::size_t>(k + 2)]) {
            add("crossing", v.id, "opposite edges " + a.edge + " and " + b.edge + " carry different labels");
            template_ok = false;
          } else if (a.source == b.source) {
            add("crossing", v.id, "orientation does not continue straight through from " + a.edge + " to " + b.edge);
            template_ok = false;
          }
        }
        if (template_ok && std::abs(labels[0] - labels[1]) < 2) {
          add("crossing", v.id,
              "crossing labels " + std::to_string(labels[0]) + " and " + std::to_string(labels[1]) +
                  " differ by less than 2");
          template_ok = false;
        }
      } else if (v.kind == VertexKind::white) {
        int lo = *std::min_element(labels.begin(), labels.end());
        bool alternating = true;
        for (std::size_t k = 0; k < 6; ++k) {
          int expect = (k % 2 == 0) ? labels[0] : (labels[0] == lo ? lo + 1 : lo);
          if (labels[k] != expect) alternating = false;
        }
        if (!alternating || *std::max_element(labels.begin(), labels.end()) != lo + 1) {
          add("white", v.id, "labels around a white vertex must alternate between some i and i+1");
          template_ok = false;
        }
      } else if (v.kind == VertexKind::free) {
        if (labels[0] != labels[1]) {
          add("free", v.id, "label changes through a free vertex");
          template_ok = false;
        } else if (rot[0].source == rot[1].source) {
          add("free", v.id, "orientation reverses through a free vertex");
          template_ok = false;
        }
      }
      if (!template_ok) continue;
      BraidWord word = circle_word(chart, v.id);
      if (v.kind == VertexKind::black) {
        if (word.size() != 1) add("relator", v.id, "circle word of a black vertex must be a single generator");
      } else if (!is_trivial(word)) {
        add("relator", v.id, "circle word " + to_string(word) + " is not trivial in B" + std::to_string(chart.m));
      }
    }
  }

  void check_geometry() {
    bool any = false;
    bool all = true;
    for (const auto& v : chart.vertices) {
      if (v.position) {
        any = true;
      } else {
        all = false;
      }
    }
    bool bends = std::any_of(chart.edges.begin(), chart.edges.end(), [](const auto& e) { return !e.via.empty(); });
    if (!any && !bends) {
      // A purely combinatorial chart needs no coordinates, except for edges
      // that run boundary to boundary, which then have no drawing either.
      return;
    }
    if (any && !all) {
      add("embedding", "chart", "either every vertex has a position or none does");
      return;
    }
    if (!any && bends && !chart.vertices.empty()) {
      add("embedding", "chart", "bend points given without vertex positions");
      return;
    }
    if (report.has_clause("reference") || report.has_clause("boundary")) return;
    const auto& schema = chart.schema;
    for (const auto& v : chart.vertices) {
      if (!schema.strictly_inside(*v.position)) add("embedding", v.id, "vertex lies outside the polygon interior");
    }
    for (const auto& e : chart.edges) {
      for (const auto& p : e.via) {
        if (!schema.strictly_inside(p)) add("embedding", e.id, "bend point lies outside the polygon interior");
      }
    }
    for (std::size_t a = 0; a < chart.vertices.size(); ++a) {
      for (std::size_t b = a + 1; b < chart.vertices.size(); ++b) {
        if (near(*chart.vertices[a].position, *chart.vertices[b].position)) {
          add("embedding", chart.vertices[a].id, "vertex coincides with " + chart.vertices[b].id);
        }
      }
    }
    check_rotation_geometry();
    check_crossings();
  }

  void check_rotation_geometry() {
    for (const auto& v : chart.vertices) {
      auto it = chart.rotation.find(v.id);
      if (it == chart.rotation.end() || it->second.empty()) continue;
      std::vector<std::pair<double, EdgeEnd>> dirs;
      for (const auto& end : it->second) {
        const ChartEdge* e = chart.find_edge(end.edge);
        if (!e) return;
        auto pts = chart.polyline(*e);
        Point d = end.source ? pts[1] - pts[0] : pts[pts.size() - 2] - pts.back();
        dirs.push_back({std::atan2(d.y, d.x), end});
      }
      std::sort(dirs.begin(), dirs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t k = 0; k + 1 < dirs.size(); ++k) {
        if (std::abs(dirs[k].first - dirs[k + 1].first) < 1e-9) {
          add("embedding", v.id, "edges " + dirs[k].second.edge + " and " + dirs[k + 1].second.edge +
                                     " leave in the same direction");
          return;
        }
      }
      std::vector<EdgeEnd> geometric;
      for (auto& d : dirs) geometric.push_back(d.second);
      const auto& listed = it->second;
      bool match = false;
      for (std::size_t shift = 0; shift < listed.size() && !match; ++shift) {
        bool eq = true;
        for (std::size_t k = 0; k < listed.size(); ++k) {
          if (!(listed[(k + shift) % listed.size()] == geometric[k])) eq = false;
        }
        match = eq;
      }
      if (!match) add("rotation", v.id, "recorded rotation differs from the counterclockwise order of the drawing");
    }
  }

  void check_crossings() {
    struct Seg {
      std::size_t edge;
      std::size_t index;
      std::size_t count;
      Point a, b;
    };
    std::vector<Seg> segs;
    std::vector<std::vector<Point>> lines;
    for (std::size_t k = 0; k < chart.edges.size(); ++k) {
      lines.push_back(chart.polyline(chart.edges[k]));
      const auto& pts = lines.back();
      for (std::size_t j = 0; j + 1 < pts.size(); ++j) segs.push_back({k, j, pts.size() - 1, pts[j], pts[j + 1]});
      for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
        if (near(pts[j], pts[j + 1])) add("embedding", chart.edges[k].id, "degenerate segment");
      }
    }
    auto is_vertex_point = [&](Point p) {
      for (const auto& v : chart.vertices)
        if (near(*v.position, p)) return true;
      return false;
    };
    for (std::size_t a = 0; a < segs.size(); ++a) {
      for (std::size_t b = a + 1; b < segs.size(); ++b) {
        const Seg& s = segs[a];
        const Seg& t = segs[b];
        auto hit = intersect(s.a, s.b, t.a, t.b);
        if (hit.contact == Contact::none) continue;
        const auto& ea = chart.edges[s.edge].id;
        const auto& eb = chart.edges[t.edge].id;
        if (hit.contact == Contact::overlap) {
          add("embedding", ea, "runs along " + eb);
          continue;
        }
        if (hit.contact == Contact::proper) {
          add("embedding", ea, "crosses " + eb + " away from a vertex");
          continue;
        }
        Point p = s.a + hit.t * (s.b - s.a);
        bool endpoint_a = near(p, s.a) || near(p, s.b);
        bool endpoint_b = near(p, t.a) || near(p, t.b);
        bool consecutive = s.edge == t.edge && (s.index + 1 == t.index || t.index + 1 == s.index);
        if (endpoint_a && endpoint_b && (is_vertex_point(p) || consecutive)) continue;
        add("embedding", ea, "touches " + eb + " away from a shared vertex");
      }
    }
  }
};

}  // namespace

ValidationReport validate_chart(const Chart& chart) {
  Checker c{chart, {}};
  if (chart.m < 1) {
    c.add("label", "chart", "degree m must be positive");
    return c.report;
  }
  c.check_references();
  if (c.report.has_clause("reference")) return c.report;
  c.check_boundary();
  c.check_vertices();
  c.check_geometry();
  return c.report;
}

}  // namespace chartbraid
