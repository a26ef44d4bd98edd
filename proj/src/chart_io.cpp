#include <array>
#include <charconv>
#include <cmath>

#include "chart_text.hpp"
#include "chartbraid/chart.hpp"
#include "chartbraid/error.hpp"

namespace chartbraid {

std::string format_number(double v) {
  if (v == 0) return "0";
  std::array<char, 64> buf{};
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), p);
}

namespace detail {

namespace {

VertexKind parse_kind(const Line& line, const Token& t) {
  if (t.text == "black") return VertexKind::black;
  if (t.text == "white") return VertexKind::white;
  if (t.text == "crossing") return VertexKind::crossing;
  if (t.text == "free") return VertexKind::free;
  line.fail(t, "unknown vertex kind");
}

Point parse_point(const Line& line, const Token& t, std::string_view s) {
  auto parts = split(s, ',');
  Point p;
  if (parts.size() != 2 || !parse_double(parts[0], p.x) || !parse_double(parts[1], p.y)) {
    line.fail(t, "expected a point <x>,<y>");
  }
  return p;
}

Endpoint parse_endpoint(const Line& line, const Token& t) {
  constexpr std::string_view prefix = "boundary:";
  if (t.text.substr(0, prefix.size()) == prefix) {
    auto parts = split(t.text.substr(prefix.size()), ',');
    int seg = 0;
    double off = 0;
    if (parts.size() != 2 || !parse_int(parts[0], seg) || !parse_double(parts[1], off)) {
      line.fail(t, "expected boundary:<segment>,<offset>");
    }
    return Endpoint::at_boundary(seg, off);
  }
  if (t.text.find(':') != std::string_view::npos || t.text.find(',') != std::string_view::npos) {
    line.fail(t, "vertex ids may not contain ':' or ','");
  }
  return Endpoint::at_vertex(std::string(t.text));
}

}  // namespace

ChartVertex parse_vertex_line(const Line& line) {
  ChartVertex v;
  v.id = std::string(line.at(1).text);
  v.kind = parse_kind(line, line.at(2));
  if (line.tokens.size() > 3) {
    if (line.tokens[3].text != "at" || line.tokens.size() != 5) line.fail(line.tokens[3], "expected 'at <x>,<y>'");
    v.position = parse_point(line, line.tokens[4], line.tokens[4].text);
  }
  return v;
}

ChartEdge parse_edge_line(const Line& line, std::string* label_text) {
  ChartEdge e;
  e.id = std::string(line.at(1).text);
  const Token& label = line.at(2);
  if (label_text) {
    *label_text = std::string(label.text);
    parse_int(label.text, e.label);  // symbolic labels stay 0 until bound
  } else {
    e.label = require_int(line, label, label.text);
  }
  e.from = parse_endpoint(line, line.at(3));
  e.to = parse_endpoint(line, line.at(4));
  if (line.at(5).text != "via") line.fail(line.at(5), "expected 'via'");
  for (std::size_t k = 6; k < line.tokens.size(); ++k) {
    e.via.push_back(parse_point(line, line.tokens[k], line.tokens[k].text));
  }
  return e;
}

std::pair<std::string, std::vector<EdgeEnd>> parse_rot_line(const Line& line) {
  std::string vertex(line.at(1).text);
  std::vector<EdgeEnd> ends;
  for (std::size_t k = 2; k < line.tokens.size(); ++k) {
    const Token& t = line.tokens[k];
    auto colon = t.text.rfind(':');
    if (colon == std::string_view::npos || colon + 2 != t.text.size() ||
        (t.text[colon + 1] != 's' && t.text[colon + 1] != 't')) {
      line.fail(t, "expected <edge>:s or <edge>:t");
    }
    ends.push_back({std::string(t.text.substr(0, colon)), t.text[colon + 1] == 's'});
  }
  return {vertex, ends};
}

std::string vertex_line(const ChartVertex& v) {
  std::string s = "v " + v.id + " " + std::string(to_string(v.kind));
  if (v.position) s += " at " + format_number(v.position->x) + "," + format_number(v.position->y);
  return s;
}

std::string endpoint_text(const Endpoint& p) {
  if (!p.on_boundary()) return p.vertex;
  return "boundary:" + std::to_string(p.boundary.segment) + "," + format_number(p.boundary.offset);
}

std::string edge_line(const ChartEdge& e, const std::string& label_text) {
  std::string s = "e " + e.id + " " + label_text + " " + endpoint_text(e.from) + " " + endpoint_text(e.to) + " via";
  for (const auto& p : e.via) s += " " + format_number(p.x) + "," + format_number(p.y);
  return s;
}

std::string rot_line(const std::string& vertex, const std::vector<EdgeEnd>& ends) {
  std::string s = "rot " + vertex;
  for (const auto& end : ends) s += " " + end.edge + (end.source ? ":s" : ":t");
  return s;
}

}  // namespace detail

std::string serialize(const Chart& chart) {
  std::string out;
  for (const auto& c : chart.comments) out += c + "\n";
  out += "chart m=" + std::to_string(chart.m) + " genus=" + std::to_string(chart.schema.genus());
  if (chart.schema.is_disk()) out += " disk";
  out += "\n";
  for (const auto& v : chart.vertices) out += detail::vertex_line(v) + "\n";
  for (const auto& e : chart.edges) out += detail::edge_line(e, std::to_string(e.label)) + "\n";
  for (const auto& v : chart.vertices) {
    auto it = chart.rotation.find(v.id);
    if (it != chart.rotation.end()) out += detail::rot_line(v.id, it->second) + "\n";
  }
  return out;
}

Chart parse_chart(std::string_view text) {
  using namespace detail;
  Chart chart;
  bool header = false;
  for (const Line& line : split_lines(text)) {
    if (is_blank(line)) continue;
    if (is_comment(line)) {
      if (header) throw ParseError("comments are only allowed before the header", line.number, 1);
      chart.comments.emplace_back(line.text);
      continue;
    }
    const auto& head = line.tokens[0].text;
    if (!header) {
      if (head != "chart") line.fail(line.tokens[0], "expected 'chart m=<m> genus=<g>' header");
      chart.m = require_int(line, line.at(1), keyed(line, line.at(1), "m"));
      if (chart.m < 1) line.fail(line.at(1), "m must be positive");
      int genus = require_int(line, line.at(2), keyed(line, line.at(2), "genus"));
      if (genus < 0) line.fail(line.at(2), "genus must be non-negative");
      bool disk = false;
      if (line.tokens.size() > 3) {
        if (line.tokens[3].text != "disk" || line.tokens.size() > 4 || genus != 0) {
          line.fail(line.tokens[3], "only 'disk' may follow genus=0");
        }
        disk = true;
      }
      chart.schema = SurfaceSchema(genus, disk);
      header = true;
      continue;
    }
    if (head == "v") {
      if (line.tokens.size() < 3) line.fail(line.tokens[0], "expected 'v <id> <kind>'");
      chart.vertices.push_back(parse_vertex_line(line));
    } else if (head == "e") {
      chart.edges.push_back(parse_edge_line(line));
    } else if (head == "rot") {
      auto [vertex, ends] = parse_rot_line(line);
      if (chart.rotation.contains(vertex)) line.fail(line.tokens[1], "duplicate rotation");
      chart.rotation.emplace(std::move(vertex), std::move(ends));
    } else {
      line.fail(line.tokens[0], "unknown record");
    }
  }
  if (!header) throw ParseError("missing 'chart' header", 1, 1);
  return chart;
}

}  // namespace chartbraid
