#include "bubbly/dominance.hpp"

#include <algorithm>

namespace bubbly {

namespace {

// Reachability from the root with one node pretended absent. skip == invalid
// gives plain reachability.
std::vector<bool> reach_without(const Graph& g, NodeId skip) {
    std::vector<bool> seen(g.id_bound(), false);
    NodeId root = g.root();
    if (!root.valid() || root == skip)
        return seen;
    std::vector<NodeId> work{root};
    seen[root.value()] = true;
    while (!work.empty()) {
        NodeId n = work.back();
        work.pop_back();
        for (NodeId s : g.successors(n)) {
            if (s == skip || seen[s.value()])
                continue;
            seen[s.value()] = true;
            work.push_back(s);
        }
    }
    return seen;
}

} // namespace

bool dominates(const Graph& g, NodeId d, NodeId n) {
    if (d == n || !g.alive(d) || !g.alive(n))
        return false;
    std::vector<bool> reach = reach_without(g, d);
    std::vector<bool> all = reach_without(g, NodeId::invalid());
    if (!all[n.value()])
        return false; // unreachable nodes have no dominators
    return !reach[n.value()];
}

std::vector<std::vector<NodeId>> dominator_sets(const Graph& g) {
    std::vector<std::vector<NodeId>> dom(g.id_bound());
    std::vector<bool> reachable = reach_without(g, NodeId::invalid());
    for (std::uint32_t c = 0; c < g.id_bound(); ++c) {
        NodeId cand(c);
        if (!g.alive(cand) || !reachable[c])
            continue;
        std::vector<bool> without = reach_without(g, cand);
        for (std::uint32_t n = 0; n < g.id_bound(); ++n) {
            if (n == c || !g.alive(NodeId(n)) || !reachable[n])
                continue;
            if (!without[n])
                dom[n].push_back(cand);
        }
    }
    return dom;
}

NodeId immediate_dominator(const Graph& g, NodeId n) {
    if (n == g.root())
        throw graph_error("the root has no immediate dominator");
    auto idoms = immediate_dominators(g);
    if (n.value() >= idoms.size() || !idoms[n.value()])
        throw graph_error("node " + std::to_string(n.value()) +
                          " is unreachable and has no immediate dominator");
    return *idoms[n.value()];
}

std::vector<std::optional<NodeId>> immediate_dominators(const Graph& g) {
    auto dom = dominator_sets(g);
    std::vector<std::optional<NodeId>> idom(g.id_bound());
    // The proper dominators of a node form a chain; the one closest to the
    // node is the one with the largest dominator set of its own.
    for (std::uint32_t n = 0; n < g.id_bound(); ++n) {
        if (dom[n].empty())
            continue;
        NodeId best = dom[n].front();
        std::size_t best_size = dom[best.value()].size();
        for (NodeId cand : dom[n]) {
            std::size_t size = dom[cand.value()].size();
            if (size > best_size) {
                best = cand;
                best_size = size;
            }
        }
        idom[n] = best;
    }
    return idom;
}

DominatorReport validate_attribute(const Graph& g) {
    DominatorReport report;
    auto fail = [&](std::string msg) {
        report.ok = false;
        report.problems.push_back(std::move(msg));
    };
    auto dom = dominator_sets(g);
    auto idom = immediate_dominators(g);
    std::vector<bool> reachable = reach_without(g, NodeId::invalid());

    for (NodeId n : g.live_nodes()) {
        if (!reachable[n.value()]) {
            fail("live node " + std::to_string(n.value()) + " is unreachable");
            continue;
        }
        DominatorEntry entry;
        entry.node = n;
        entry.stored = g.dominator(n);
        entry.immediate = idom[n.value()];
        if (n == g.root()) {
            entry.sound = !entry.stored;
            if (entry.stored)
                fail("root stores a dominator");
        } else if (!entry.stored) {
            fail("node " + std::to_string(n.value()) + " has no stored dominator");
        } else {
            const auto& ds = dom[n.value()];
            entry.sound = std::find(ds.begin(), ds.end(), *entry.stored) != ds.end();
            if (!entry.sound)
                fail("stored dominator " + std::to_string(entry.stored->value()) +
                     " of node " + std::to_string(n.value()) + " does not dominate it");
        }
        report.entries.push_back(entry);
    }
    return report;
}

NodeId chain_meet(const Graph& g, NodeId a, NodeId b) {
    std::vector<bool> on_chain(g.id_bound(), false);
    for (NodeId n = a;;) {
        on_chain[n.value()] = true;
        auto d = g.dominator(n);
        if (!d)
            break;
        n = *d;
    }
    for (NodeId n = b;;) {
        if (on_chain[n.value()])
            return n;
        auto d = g.dominator(n);
        if (!d)
            break;
        n = *d;
    }
    throw graph_error("dominator chains share no node; attribute is corrupt");
}

void initialize_dominators(Graph& g) {
    auto idom = immediate_dominators(g);
    for (NodeId n : g.live_nodes()) {
        if (n == g.root())
            continue;
        if (idom[n.value()])
            g.set_dominator(n, *idom[n.value()]);
    }
}

} // namespace bubbly
