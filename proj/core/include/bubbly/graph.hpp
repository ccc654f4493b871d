#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bubbly/symbols.hpp"

namespace bubbly {

class graph_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Identifies a node within one Graph. Ids are handed out by a monotone
// counter and never reused, so a stale id can be detected (dead slot) rather
// than silently aliasing a new node.
class NodeId {
public:
    constexpr NodeId() : value_(kInvalid) {}
    constexpr explicit NodeId(std::uint32_t v) : value_(v) {}

    constexpr std::uint32_t value() const { return value_; }
    constexpr bool valid() const { return value_ != kInvalid; }

    friend constexpr bool operator==(NodeId a, NodeId b) { return a.value_ == b.value_; }
    friend constexpr bool operator!=(NodeId a, NodeId b) { return a.value_ != b.value_; }
    friend constexpr bool operator<(NodeId a, NodeId b) { return a.value_ < b.value_; }

    static constexpr NodeId invalid() { return NodeId(); }

private:
    static constexpr std::uint32_t kInvalid = 0xffffffffu;
    std::uint32_t value_;
};

// One incoming edge: predecessor node plus which successor slot points here.
// Parallel edges appear once per slot.
struct PredEdge {
    NodeId from;
    std::uint32_t index;

    friend bool operator==(const PredEdge& a, const PredEdge& b) {
        return a.from == b.from && a.index == b.index;
    }
};

enum class ChoiceSide { Left = 0, Right = 1 };

// Counters for the attribute-maintenance overhead report.
struct WriteCounters {
    std::uint64_t label_writes = 0;      // node creations
    std::uint64_t successor_writes = 0;  // successor slot assignments
    std::uint64_t pred_writes = 0;       // predecessor bookkeeping entries
    std::uint64_t dominator_writes = 0;  // dominator attribute assignments
};

// A rooted, acyclic, node-labeled term graph with ordered successors,
// a maintained predecessor multiset, and a dominator attribute on every
// non-root node (root's dominator is absent). The inverse of the dominator
// attribute is indexed so "every node whose stored dominator is n" is a
// constant-time lookup.
class Graph {
public:
    Graph() = default;

    // --- construction ------------------------------------------------------

    // Creates a node labeled `label` over existing nodes. The successor count
    // must equal the label's arity. The dominator attribute is left unset;
    // callers must assign it (or make the node root) before validation.
    // The first node added becomes the root.
    NodeId add_node(const Symbol* label, std::span<const NodeId> successors);
    NodeId add_node(const Symbol* label, std::initializer_list<NodeId> successors);

    void set_root(NodeId n);
    NodeId root() const { return root_; }

    // --- node access --------------------------------------------------------

    bool alive(NodeId n) const;
    const Symbol* label(NodeId n) const;
    std::span<const NodeId> successors(NodeId n) const;
    NodeId successor(NodeId n, std::uint32_t index) const;
    std::span<const PredEdge> predecessors(NodeId n) const;
    std::optional<NodeId> dominator(NodeId n) const;
    // Nodes whose stored dominator is n.
    std::span<const NodeId> dominated_by(NodeId n) const;

    void set_dominator(NodeId n, NodeId d);
    void clear_dominator(NodeId n);

    std::size_t live_count() const { return live_count_; }
    std::vector<NodeId> live_nodes() const;
    // Total ids ever created; all ids below this are valid-or-dead.
    std::uint32_t id_bound() const { return static_cast<std::uint32_t>(slots_.size()); }

    // --- rewriting primitives ----------------------------------------------

    // Redirects every incoming edge of p to q, gives q p's former dominator,
    // and transfers rootness (root's dominator stays absent). p keeps its
    // outgoing edges; if nothing else references it, gc() will remove it.
    void replace(NodeId p, NodeId q);

    // Like replace but leaves q's dominator attribute untouched.
    void redirect_incoming(NodeId p, NodeId q);

    // Removes every node unreachable from the root; returns the removed ids.
    // Idempotent; a fixpoint on fully reachable graphs.
    std::vector<NodeId> gc();

    // Local reachability cleanup: removes `seed` if it became unreachable
    // (no predecessors, not root) and cascades through nodes whose predecessor
    // sets drain as a consequence. In an acyclic graph that was fully
    // reachable before the triggering edit, this removes exactly the nodes a
    // global gc would, touching only the dying region and its fringe.
    std::vector<NodeId> cascade_unreachable(NodeId seed);

    // Precondition: the root is a choice. Builds a new graph from the chosen
    // alternative with fresh ids. Copied nodes keep their dominator when it
    // survives the extraction, and fall back to the new root otherwise.
    Graph extract_alternative(ChoiceSide side) const;

    // Deep copy of the reachable subgraph, fresh ids, dominators mapped.
    // When out_map is given, it receives original-id -> copy-id.
    Graph clone(std::unordered_map<std::uint32_t, NodeId>* out_map = nullptr) const;

    // --- engine internals (used by rewrite/bubbling) -------------------------

    // Creates a node whose successor slots are appended later; used for the
    // fresh choice a bubbling step introduces.
    NodeId add_node_reserved(const Symbol* label);
    void append_successor(NodeId n, NodeId child);
    // Points slot `index` of `parent` at `child`, maintaining predecessors.
    void set_successor(NodeId parent, std::uint32_t index, NodeId child);
    // Fresh node with n's label and successor array (registers predecessor
    // entries on the shared successors). Dominator unset.
    NodeId clone_shell(NodeId n);
    // Removes a node with no incoming edges, unhooking its outgoing edges.
    void remove_node(NodeId n);

    // --- instrumentation -----------------------------------------------------

    // While a touch log is open, every node whose slot is read or written is
    // recorded (set semantics).
    void begin_touch_log();
    std::vector<NodeId> end_touch_log();

    const WriteCounters& write_counters() const { return writes_; }
    void reset_write_counters() { writes_ = WriteCounters{}; }

    // True when `to` is reachable from `from` along successor edges.
    bool reaches(NodeId from, NodeId to) const;

private:
    struct Slot {
        const Symbol* label = nullptr;
        std::vector<NodeId> successors;
        std::vector<PredEdge> preds;
        std::optional<NodeId> dominator;
        std::vector<NodeId> dominated; // inverse of the dominator attribute
        bool live = false;
    };

    Slot& slot(NodeId n);
    const Slot& slot(NodeId n) const;
    Slot& live_slot(NodeId n);
    const Slot& live_slot(NodeId n) const;
    void touch(NodeId n) const;
    void add_pred(NodeId child, NodeId parent, std::uint32_t index);
    void drop_pred(NodeId child, NodeId parent, std::uint32_t index);
    void unlink_dominator(NodeId n);

    std::vector<Slot> slots_;
    NodeId root_ = NodeId::invalid();
    std::size_t live_count_ = 0;
    WriteCounters writes_;

    mutable std::vector<NodeId> touch_log_;
    mutable std::vector<bool> touched_;
    mutable bool logging_ = false;
};

// Structural health report: bidirectional edge consistency, arity agreement,
// acyclicity, root/dominator-presence discipline and (optionally) full
// reachability. Dominator *soundness* lives in dominance.hpp.
struct GraphCheck {
    bool ok = true;
    std::vector<std::string> problems;
};

GraphCheck check_structure(const Graph& g, bool require_fully_reachable = true);

// Equality up to node renaming: same root shape, labels and successor order,
// same sharing. Dominator attributes are ignored.
bool isomorphic(const Graph& a, const Graph& b);

} // namespace bubbly

template <>
struct std::hash<bubbly::NodeId> {
    std::size_t operator()(bubbly::NodeId n) const noexcept {
        return std::hash<std::uint32_t>()(n.value());
    }
};
