#include <set>
#include <sstream>

#include "chartbraid/render.hpp"

namespace chartbraid {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string vertex_style(VertexKind kind) {
  switch (kind) {
    case VertexKind::black: return "shape=circle, style=filled, fillcolor=black, width=0.15, label=\"\"";
    case VertexKind::white: return "shape=circle, width=0.25, label=\"\"";
    case VertexKind::crossing: return "shape=point, width=0.08";
    case VertexKind::free: return "shape=point, width=0.05";
  }
  return "";
}

std::string boundary_node(const std::string& prefix, const BoundaryPoint& b) {
  return prefix + "boundary:" + std::to_string(b.segment) + "," + format_number(b.offset);
}

void chart_body(std::ostream& out, const std::vector<ChartVertex>& vertices, const std::vector<ChartEdge>& edges,
                const std::string& prefix, const std::set<std::string>& external, const std::string& indent) {
  for (const auto& v : vertices) {
    out << indent << quote(prefix + v.id) << " [" << vertex_style(v.kind) << "];\n";
  }
  std::set<std::string> seen;
  auto end = [&](const Endpoint& e) {
    if (!e.on_boundary()) return external.count(e.vertex) ? e.vertex : prefix + e.vertex;
    auto id = boundary_node(prefix, e.boundary);
    if (seen.insert(id).second) out << indent << quote(id) << " [shape=point, width=0.03, color=gray];\n";
    return id;
  };
  for (const auto& e : edges) {
    auto from = end(e.from);
    auto to = end(e.to);
    out << indent << quote(from) << " -> " << quote(to) << " [label=" << quote(std::to_string(e.label)) << "];\n";
  }
}

}  // namespace

std::string render_dot(const Chart& chart) {
  std::ostringstream out;
  out << "digraph chart {\n";
  out << "  label=" << quote("m=" + std::to_string(chart.m) + " genus=" + std::to_string(chart.schema.genus()) +
                           (chart.schema.is_disk() ? " disk" : "")) << ";\n";
  chart_body(out, chart.vertices, chart.edges, "", {}, "  ");
  out << "}\n";
  return out.str();
}

std::string render_dot(const Diagram& diagram) {
  const auto& c = diagram.complex;
  std::ostringstream out;
  out << "digraph complex {\n";
  for (const auto& r : c.regions) out << "  " << quote("region:" + r.id) << " [shape=ellipse, label=" << quote(r.id) << "];\n";
  for (const auto& s : c.sheets) {
    out << "  " << quote("sheet:" + s.id) << " [shape=box, label=" << quote(s.id + (s.orientation > 0 ? " +" : " -")) << "];\n";
  }
  for (const auto& k : c.curves) out << "  " << quote("dcurve:" + k.id) << " [shape=diamond, label=" << quote(k.id) << "];\n";
  for (const auto& b : c.branch_points) {
    out << "  " << quote("bpoint:" + b.id) << " [shape=triangle, label=" << quote(b.id + (b.sign > 0 ? " +" : " -")) << "];\n";
  }
  for (const auto& t : c.triple_points) out << "  " << quote("tpoint:" + t.id) << " [shape=star, label=" << quote(t.id) << "];\n";
  for (const auto& p : c.ports) out << "  " << quote("port:" + p.name) << " [shape=plaintext, label=" << quote(p.name) << "];\n";
  for (const auto& s : c.sheets) {
    out << "  " << quote("sheet:" + s.id) << " -> " << quote("region:" + s.front) << " [dir=none, label=\"front\"];\n";
    out << "  " << quote("sheet:" + s.id) << " -> " << quote("region:" + s.back) << " [dir=none, style=dashed, label=\"back\"];\n";
    for (const auto& b : s.boundary) out << "  " << quote("sheet:" + s.id) << " -> " << quote("port:" + b) << " [dir=none, style=dotted];\n";
  }
  for (const auto& k : c.curves) {
    auto cell = [&](const std::string& sheet, const char* role) {
      out << "  " << quote("dcurve:" + k.id) << " -> " << quote("sheet:" + sheet) << " [dir=none, label=\"" << role << "\"];\n";
    };
    cell(k.over_left, "over-left");
    cell(k.over_right, "over-right");
    cell(k.under_left, "under-left");
    cell(k.under_right, "under-right");
    if (k.closed) continue;
    for (int e = 0; e < 2; ++e) {
      const auto& end = k.ends[e];
      std::string target;
      if (end.kind == CurveEndKind::branch) target = "bpoint:" + end.ref;
      if (end.kind == CurveEndKind::triple) target = "tpoint:" + end.ref;
      if (end.kind == CurveEndKind::port) target = "port:" + end.ref;
      if (target.empty()) continue;
      if (e == 0) out << "  " << quote(target) << " -> " << quote("dcurve:" + k.id) << " [style=bold];\n";
      else out << "  " << quote("dcurve:" + k.id) << " -> " << quote(target) << " [style=bold];\n";
    }
  }
  if (diagram.chart) {
    std::set<std::string> d2;
    for (const auto& v : diagram.chart->degree2) {
      d2.insert("d2:" + v.id);
      out << "  " << quote("d2:" + v.id) << " [shape=point, width=0.08, color=red, xlabel=" << quote(v.id) << "];\n";
      out << "  " << quote("d2:" + v.id) << " -> " << quote("dcurve:" + v.curve) << " [dir=none, color=red, style=dotted];\n";
    }
    for (const auto& f : diagram.chart->fragments) {
      out << "  subgraph " << quote("cluster_" + f.sheet) << " {\n";
      out << "    label=" << quote("chart on " + f.sheet) << ";\n";
      std::vector<ChartEdge> edges = f.edges;
      for (auto& e : edges) {
        for (auto* end : {&e.from, &e.to}) {
          if (!end->on_boundary() && d2.count("d2:" + end->vertex)) end->vertex = "d2:" + end->vertex;
        }
      }
      chart_body(out, f.vertices, edges, f.sheet + "/", d2, "    ");
      out << "  }\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace chartbraid
