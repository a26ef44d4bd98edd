#include <algorithm>

#include "chart_text.hpp"
#include "chartbraid/diagram.hpp"
#include "chartbraid/error.hpp"

namespace chartbraid {

namespace {

template <class T>
const T* find_by_id(const std::vector<T>& items, std::string_view id) {
  for (const auto& item : items) {
    if (item.id == id) return &item;
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(LevelPair levels) {
  switch (levels) {
    case LevelPair::top_middle: return "tm";
    case LevelPair::top_bottom: return "tb";
    case LevelPair::middle_bottom: return "mb";
  }
  return "?";
}

const Region* DiagramComplex::find_region(std::string_view id) const { return find_by_id(regions, id); }
const Sheet* DiagramComplex::find_sheet(std::string_view id) const { return find_by_id(sheets, id); }
const DoubleCurve* DiagramComplex::find_curve(std::string_view id) const { return find_by_id(curves, id); }
const BranchPoint* DiagramComplex::find_branch_point(std::string_view id) const {
  return find_by_id(branch_points, id);
}
const TriplePoint* DiagramComplex::find_triple_point(std::string_view id) const {
  return find_by_id(triple_points, id);
}
const Port* DiagramComplex::find_port(std::string_view id) const {
  for (const auto& p : ports) {
    if (p.name == id) return &p;
  }
  return nullptr;
}

const Degree2Vertex* DiagramChart::find_degree2(std::string_view id) const { return find_by_id(degree2, id); }

const SheetChart* DiagramChart::find_fragment(std::string_view sheet) const {
  for (const auto& f : fragments) {
    if (f.sheet == sheet) return &f;
  }
  return nullptr;
}

bool DiagramChart::empty() const {
  if (!degree2.empty()) return false;
  return std::all_of(fragments.begin(), fragments.end(),
                     [](const SheetChart& f) { return f.vertices.empty() && f.edges.empty(); });
}

namespace {

using namespace detail;

std::vector<std::string> id_list(std::string_view s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  for (auto part : split(s, ',')) out.emplace_back(part);
  return out;
}

std::pair<std::string, std::string> id_pair(const Line& line, const Token& t, std::string_view s) {
  auto parts = split(s, '/');
  if (parts.size() != 2 || parts[0].empty() || parts[1].empty()) line.fail(t, "expected <left>/<right>");
  return {std::string(parts[0]), std::string(parts[1])};
}

int parse_sign(const Line& line, const Token& t, std::string_view s) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  line.fail(t, "expected + or -");
}

CurveEnd parse_end(const Line& line, const Token& t, std::string_view s) {
  if (s == "-") return {CurveEndKind::dangling, ""};
  if (s.size() > 2 && s[1] == ':') {
    std::string ref(s.substr(2));
    if (s[0] == 'b') return {CurveEndKind::branch, ref};
    if (s[0] == 't') return {CurveEndKind::triple, ref};
    if (s[0] == 'p') return {CurveEndKind::port, ref};
  }
  line.fail(t, "expected b:<id>, t:<id>, p:<port> or -");
}

std::string end_text(const CurveEnd& e) {
  switch (e.kind) {
    case CurveEndKind::branch: return "b:" + e.ref;
    case CurveEndKind::triple: return "t:" + e.ref;
    case CurveEndKind::port: return "p:" + e.ref;
    case CurveEndKind::dangling: return "-";
  }
  return "-";
}

Germ parse_germ(const Line& line, const Token& t) {
  auto colon = t.text.rfind(':');
  auto dot = t.text.rfind('.', colon);
  if (colon == std::string_view::npos || dot == std::string_view::npos || dot == 0) {
    line.fail(t, "expected <curve>.<0|1>:<tm|tb|mb>");
  }
  Germ g;
  g.curve = std::string(t.text.substr(0, dot));
  auto end = t.text.substr(dot + 1, colon - dot - 1);
  if (end == "0") {
    g.end = 0;
  } else if (end == "1") {
    g.end = 1;
  } else {
    line.fail(t, "germ end must be 0 or 1");
  }
  auto levels = t.text.substr(colon + 1);
  if (levels == "tm") {
    g.levels = LevelPair::top_middle;
  } else if (levels == "tb") {
    g.levels = LevelPair::top_bottom;
  } else if (levels == "mb") {
    g.levels = LevelPair::middle_bottom;
  } else {
    line.fail(t, "germ levels must be tm, tb or mb");
  }
  return g;
}

std::string sign_text(int s) { return s > 0 ? "+" : "-"; }

void expect_count(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    const Token& t = line.tokens.size() > n ? line.tokens[n] : line.tokens.back();
    line.fail(t, "expected " + std::to_string(n) + " fields");
  }
}

Endpoint fragment_endpoint(const Line& line, const Token& t, const Endpoint& p) {
  if (p.on_boundary() && p.boundary.segment < 0) line.fail(t, "boundary index must be non-negative");
  return p;
}

}  // namespace

std::string serialize(const Diagram& d) {
  std::string out;
  for (const auto& c : d.comments) out += c + "\n";
  const auto& c = d.complex;
  out += "complex\n";
  for (const auto& r : c.regions) out += "region " + r.id + " adj=" + join(r.adjacent, ",") + "\n";
  for (const auto& s : c.sheets) {
    out += "sheet " + s.id + " " + sign_text(s.orientation) + " front=" + s.front + " back=" + s.back;
    if (!s.boundary.empty()) out += " bnd=" + join(s.boundary, ",");
    out += "\n";
  }
  for (const auto& k : c.curves) {
    out += "dcurve " + k.id + " over=" + k.over_left + "/" + k.over_right + " under=" + k.under_left + "/" +
           k.under_right + " ends=";
    out += k.closed ? std::string("closed") : end_text(k.ends[0]) + "," + end_text(k.ends[1]);
    out += "\n";
  }
  for (const auto& b : c.branch_points) out += "bpoint " + b.id + " sign=" + sign_text(b.sign) + "\n";
  for (const auto& t : c.triple_points) {
    out += "tpoint " + t.id;
    for (const auto& g : t.germs) {
      out += " " + g.curve + "." + std::to_string(g.end) + ":" + std::string(to_string(g.levels));
    }
    out += "\n";
  }
  for (const auto& p : c.ports) {
    out += "port " + p.name;
    if (p.kind == PortKind::arc) {
      out += " arc\n";
    } else {
      out += " dcurve over=" + p.over_left + "/" + p.over_right + " under=" + p.under_left + "/" + p.under_right +
             "\n";
    }
  }
  if (d.chart) {
    const auto& ch = *d.chart;
    out += "chart m=" + std::to_string(ch.m) + "\n";
    for (const auto& v : ch.degree2) {
      out += "d2 " + v.id + " curve=" + v.curve + " label=" + std::to_string(v.label) +
             " level=" + (v.over ? "over" : "under") + "\n";
    }
    for (const auto& f : ch.fragments) {
      out += "on-sheet " + f.sheet + "\n";
      for (const auto& v : f.vertices) out += vertex_line(v) + "\n";
      for (const auto& e : f.edges) out += edge_line(e, std::to_string(e.label)) + "\n";
      for (const auto& v : f.vertices) {
        auto it = f.rotation.find(v.id);
        if (it != f.rotation.end()) out += rot_line(v.id, it->second) + "\n";
      }
    }
  }
  return out;
}

Diagram parse_diagram(std::string_view text) {
  Diagram d;
  auto& c = d.complex;
  bool header = false;
  SheetChart* fragment = nullptr;
  for (const Line& line : split_lines(text)) {
    if (is_blank(line)) continue;
    if (is_comment(line)) {
      if (header) throw ParseError("comments are only allowed before the header", line.number, 1);
      d.comments.emplace_back(line.text);
      continue;
    }
    const auto& head = line.tokens[0].text;
    if (!header) {
      if (head != "complex") line.fail(line.tokens[0], "expected 'complex' header");
      expect_count(line, 1);
      header = true;
      continue;
    }
    if (d.chart) {
      auto& ch = *d.chart;
      if (head == "d2") {
        expect_count(line, 5);
        Degree2Vertex v;
        v.id = std::string(line.at(1).text);
        v.curve = std::string(keyed(line, line.at(2), "curve"));
        v.label = require_int(line, line.at(3), keyed(line, line.at(3), "label"));
        auto level = keyed(line, line.at(4), "level");
        if (level != "over" && level != "under") line.fail(line.at(4), "level must be over or under");
        v.over = level == "over";
        ch.degree2.push_back(std::move(v));
      } else if (head == "on-sheet") {
        expect_count(line, 2);
        std::string id(line.at(1).text);
        if (ch.find_fragment(id)) line.fail(line.at(1), "duplicate on-sheet block");
        ch.fragments.push_back({id, {}, {}, {}});
        fragment = &ch.fragments.back();
      } else if (head == "v" || head == "e" || head == "rot") {
        if (!fragment) line.fail(line.tokens[0], "chart record outside an on-sheet block");
        if (head == "v") {
          if (line.tokens.size() < 3) line.fail(line.tokens[0], "expected 'v <id> <kind>'");
          auto v = parse_vertex_line(line);
          if (v.position) line.fail(line.tokens[3], "chart fragments carry no coordinates");
          fragment->vertices.push_back(std::move(v));
        } else if (head == "e") {
          auto e = parse_edge_line(line);
          e.from = fragment_endpoint(line, line.at(3), e.from);
          e.to = fragment_endpoint(line, line.at(4), e.to);
          if (!e.via.empty()) line.fail(line.at(6), "chart fragments carry no coordinates");
          fragment->edges.push_back(std::move(e));
        } else {
          auto [vertex, ends] = parse_rot_line(line);
          if (fragment->rotation.contains(vertex)) line.fail(line.tokens[1], "duplicate rotation");
          fragment->rotation.emplace(std::move(vertex), std::move(ends));
        }
      } else {
        line.fail(line.tokens[0], "unknown chart record");
      }
      continue;
    }
    if (head == "region") {
      expect_count(line, 3);
      c.regions.push_back({std::string(line.at(1).text), id_list(keyed(line, line.at(2), "adj"))});
    } else if (head == "sheet") {
      if (line.tokens.size() != 5 && line.tokens.size() != 6) line.fail(line.tokens[0], "expected 4 or 5 fields");
      Sheet s;
      s.id = std::string(line.at(1).text);
      s.orientation = parse_sign(line, line.at(2), line.at(2).text);
      s.front = std::string(keyed(line, line.at(3), "front"));
      s.back = std::string(keyed(line, line.at(4), "back"));
      if (line.tokens.size() == 6) s.boundary = id_list(keyed(line, line.at(5), "bnd"));
      c.sheets.push_back(std::move(s));
    } else if (head == "dcurve") {
      expect_count(line, 5);
      DoubleCurve k;
      k.id = std::string(line.at(1).text);
      std::tie(k.over_left, k.over_right) = id_pair(line, line.at(2), keyed(line, line.at(2), "over"));
      std::tie(k.under_left, k.under_right) = id_pair(line, line.at(3), keyed(line, line.at(3), "under"));
      auto ends = keyed(line, line.at(4), "ends");
      if (ends == "closed") {
        k.closed = true;
      } else {
        auto parts = split(ends, ',');
        if (parts.size() != 2) line.fail(line.at(4), "expected ends=<end>,<end> or ends=closed");
        k.ends[0] = parse_end(line, line.at(4), parts[0]);
        k.ends[1] = parse_end(line, line.at(4), parts[1]);
      }
      c.curves.push_back(std::move(k));
    } else if (head == "bpoint") {
      expect_count(line, 3);
      c.branch_points.push_back(
          {std::string(line.at(1).text), parse_sign(line, line.at(2), keyed(line, line.at(2), "sign"))});
    } else if (head == "tpoint") {
      TriplePoint t;
      t.id = std::string(line.at(1).text);
      for (std::size_t k = 2; k < line.tokens.size(); ++k) t.germs.push_back(parse_germ(line, line.tokens[k]));
      c.triple_points.push_back(std::move(t));
    } else if (head == "port") {
      Port p;
      p.name = std::string(line.at(1).text);
      const auto& kind = line.at(2).text;
      if (kind == "arc") {
        expect_count(line, 3);
        p.kind = PortKind::arc;
      } else if (kind == "dcurve") {
        expect_count(line, 5);
        p.kind = PortKind::dcurve;
        std::tie(p.over_left, p.over_right) = id_pair(line, line.at(3), keyed(line, line.at(3), "over"));
        std::tie(p.under_left, p.under_right) = id_pair(line, line.at(4), keyed(line, line.at(4), "under"));
      } else {
        line.fail(line.at(2), "port kind must be arc or dcurve");
      }
      c.ports.push_back(std::move(p));
    } else if (head == "chart") {
      expect_count(line, 2);
      DiagramChart ch;
      ch.m = require_int(line, line.at(1), keyed(line, line.at(1), "m"));
      if (ch.m < 1) line.fail(line.at(1), "m must be positive");
      d.chart = std::move(ch);
    } else {
      line.fail(line.tokens[0], "unknown record");
    }
  }
  if (!header) throw ParseError("missing 'complex' header", 1, 1);
  return d;
}

}  // namespace chartbraid
