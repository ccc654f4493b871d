#pragma once

#include <cstddef>

#include "bubbly/graph.hpp"

namespace bubbly {

struct BubbleStats {
    std::size_t path_nodes = 0;      // nodes on dominator-to-choice paths, both ends included
    std::size_t fresh_created = 0;   // two clones per path node plus the fresh choice
    std::size_t fresh_surviving = 0; // 2*(path_nodes-1)+1 once the choice copies collapse
    NodeId destination;              // the fresh choice standing where the dominator was
};

// One bubbling step: moves the non-root choice c up to its stored dominator,
// duplicating the region between them once per alternative and leaving a
// fresh choice where the dominator stood. Everything outside the region stays
// shared. The graph remains structurally valid, fully reachable and
// dominator-sound; only the region, its fringe and the nodes answering to it
// are touched. Returns the fresh choice.
NodeId bubble(Graph& g, NodeId c, BubbleStats* stats = nullptr);

} // namespace bubbly
