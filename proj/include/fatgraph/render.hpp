#pragma once

#include <string>

#include "fatgraph/pairing.hpp"

namespace fatgraph {

// Graphviz text: vertices as circles named by index and sign, one edge per
// parallel family with its size and the endpoint labels in fan order.
std::string render_dot(const EmbeddedGraph &g, const std::string &name);
std::string render_dot(const GraphPair &p);

} // namespace fatgraph
