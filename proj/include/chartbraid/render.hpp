#pragma once

#include <string>

#include "chartbraid/chart.hpp"
#include "chartbraid/diagram.hpp"

namespace chartbraid {

/// Graphviz descriptions for external drawing. Output order follows the
/// input order, so equal inputs give equal text.
std::string render_dot(const Chart& chart);
std::string render_dot(const Diagram& diagram);

}  // namespace chartbraid
