#pragma once

#include <string>

#include "bubbly/graph.hpp"

namespace bubbly {

// Graphviz rendering of the live graph: `n<id> [label="<symbol>"]` per node,
// `n<a> -> n<b> [label="<argindex>"]` per successor edge, and a dashed gray
// edge from each node to its stored dominator.
std::string to_dot(const Graph& g);

} // namespace bubbly
