#pragma once

// Line-level parsing and printing of chart records, shared with the diagram
// format (which embeds chart fragments).

#include <string>
#include <utility>
#include <vector>

#include "chartbraid/chart.hpp"
#include "text.hpp"

namespace chartbraid::detail {

ChartVertex parse_vertex_line(const Line& line);
/// `label_text` receives the raw label token, for parameterized catalogs.
ChartEdge parse_edge_line(const Line& line, std::string* label_text = nullptr);
std::pair<std::string, std::vector<EdgeEnd>> parse_rot_line(const Line& line);

std::string vertex_line(const ChartVertex& v);
std::string edge_line(const ChartEdge& e, const std::string& label_text);
std::string rot_line(const std::string& vertex, const std::vector<EdgeEnd>& ends);
std::string endpoint_text(const Endpoint& p);

}  // namespace chartbraid::detail
