#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bubbly/graph.hpp"

namespace bubbly {

// Naive delete-and-reach dominance queries over the live, reachable part of a
// graph. Deliberately simple: this is the ground truth the maintained
// dominator attribute is validated against, and the initializer for freshly
// built graphs. Costs are fine at desk scale; nothing here is on the hot path
// of a rewriting step.

// True when d properly dominates n: d != n and n is unreachable from the root
// once d is deleted. The root dominates every other node; nothing dominates
// the root.
bool dominates(const Graph& g, NodeId d, NodeId n);

// Every proper dominator of every reachable node, computed by one
// delete-and-reach sweep per candidate. Result is indexed by node id.
std::vector<std::vector<NodeId>> dominator_sets(const Graph& g);

// The closest proper dominator. Error on the root (it has none) and on
// unreachable nodes.
NodeId immediate_dominator(const Graph& g, NodeId n);

// Immediate dominators for all reachable non-root nodes in one sweep.
std::vector<std::optional<NodeId>> immediate_dominators(const Graph& g);

struct DominatorEntry {
    NodeId node;
    std::optional<NodeId> stored;    // the maintained attribute
    std::optional<NodeId> immediate; // oracle ground truth
    bool sound = false;              // stored properly dominates node
};

struct DominatorReport {
    bool ok = true; // every stored attribute is sound, root's is absent
    std::vector<DominatorEntry> entries;
    std::vector<std::string> problems;
};

// Checks the maintained attribute of every live node against the oracle:
// the root carries no dominator, every other node carries one, and the stored
// dominator properly dominates its node. Stored attributes may be less tight
// than the immediate dominator; that is not a defect.
DominatorReport validate_attribute(const Graph& g);

// First node common to the stored dominator chains of a and b (the chains
// a, D(a), D(D(a)), ... always end at the root). Returns a when a lies on
// b's chain, and vice versa.
NodeId chain_meet(const Graph& g, NodeId a, NodeId b);

// Assigns every reachable non-root node its immediate dominator. Used when a
// graph is first built from an expression.
void initialize_dominators(Graph& g);

} // namespace bubbly
