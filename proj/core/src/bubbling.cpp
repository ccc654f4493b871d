#include "bubbly/bubbling.hpp"

#include <cassert>
#include <optional>
#include <unordered_map>
#include <vector>

namespace bubbly {

namespace {

// Clones the region between the choice and its dominator, one side at a time.
// The recursion runs upward along predecessor edges from the choice and stops
// at the dominator; every predecessor of an interior region node is itself in
// the region, so this visits the region exactly.
struct Traverser {
    Graph& g;
    NodeId d;                  // the dominator the walk stops at
    std::uint32_t fresh_floor; // ids at or above this are this step's clones

    std::unordered_map<NodeId, NodeId> clone; // region original -> its copy
    std::vector<NodeId> dying_holders;        // nodes whose stored dominator dies

    NodeId run(NodeId x) {
        auto it = clone.find(x);
        if (it != clone.end())
            return it->second;
        NodeId copy = g.clone_shell(x);
        clone.emplace(x, copy);
        if (x != d) {
            // Snapshot: hooking a predecessor's copy rewires edges into x
            // while this loop runs, and copies must not be traversed.
            auto span = g.predecessors(x);
            std::vector<PredEdge> preds(span.begin(), span.end());
            for (const PredEdge& e : preds) {
                if (e.from.value() >= fresh_floor)
                    continue;
                NodeId pred_copy = run(e.from);
                g.set_successor(pred_copy, e.index, copy);
            }
            // By now every region ancestor of x is cloned, so a missing map
            // entry means x's dominator sits above the region and survives;
            // it keeps dominating the copy.
            NodeId dom = *g.dominator(x);
            auto dit = clone.find(dom);
            g.set_dominator(copy, dit != clone.end() ? dit->second : dom);
        }
        // Buffered handoff (applied after the walk): survivors outside the
        // region whose stored dominator is x lose it when the region dies.
        for (NodeId z : g.dominated_by(x))
            dying_holders.push_back(z);
        return copy;
    }
};

} // namespace

NodeId bubble(Graph& g, NodeId c, BubbleStats* stats) {
    if (!g.alive(c) || !g.label(c)->is_choice())
        throw graph_error("bubble: not a live choice node");
    if (c == g.root())
        throw graph_error("bubble: a root choice is split, not bubbled");
    std::optional<NodeId> dopt = g.dominator(c);
    if (!dopt)
        throw graph_error("bubble: choice has no dominator attribute");
    NodeId d = *dopt;

    std::uint32_t fresh_floor = g.id_bound();
    NodeId r = g.add_node_reserved(g.label(c));
    if (std::optional<NodeId> dd = g.dominator(d))
        g.set_dominator(r, *dd);

    NodeId alternatives[2] = {g.successor(c, 0), g.successor(c, 1)};
    bool cleanly_owned[2];
    for (int s = 0; s < 2; ++s) {
        auto preds = g.predecessors(alternatives[s]);
        cleanly_owned[s] = preds.size() == 1 && preds[0].from == c &&
                           preds[0].index == static_cast<std::uint32_t>(s);
    }

    std::size_t path_nodes = 0;
    for (int s = 0; s < 2; ++s) {
        Traverser t{g, d, fresh_floor, {}, {}};
        t.run(c);
        for (NodeId z : t.dying_holders)
            if (!t.clone.count(z))
                g.set_dominator(z, r);

        NodeId d_copy = t.clone.at(d);
        g.append_successor(r, d_copy);
        g.set_dominator(d_copy, r);

        // The choice's copy collapses to this side's alternative. When the
        // alternative was referenced by nothing but this side of the choice,
        // the side's dominator copy now stands over it; a shared alternative
        // keeps its attribute (the buffered handoff above already moved it
        // when it pointed into the region).
        NodeId c_copy = t.clone.at(c);
        g.redirect_incoming(c_copy, alternatives[s]);
        if (cleanly_owned[s])
            g.set_dominator(alternatives[s], d_copy);
        g.remove_node(c_copy);

        path_nodes = t.clone.size();
    }

    // The fresh choice takes the dominator's place and the old region drains.
    g.replace(d, r);
    std::vector<NodeId> removed = g.cascade_unreachable(d);
    assert(removed.size() == path_nodes && "region removal out of sync");
    (void)removed;

    if (stats) {
        stats->path_nodes = path_nodes;
        stats->fresh_created = 2 * path_nodes + 1;
        stats->fresh_surviving = 2 * (path_nodes - 1) + 1;
        stats->destination = r;
    }
    return r;
}

} // namespace bubbly
