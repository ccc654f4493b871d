#include "bubbly/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace bubbly {

Graph::Slot& Graph::slot(NodeId n) {
    if (!n.valid() || n.value() >= slots_.size())
        throw graph_error("unknown node id");
    touch(n);
    return slots_[n.value()];
}

const Graph::Slot& Graph::slot(NodeId n) const {
    if (!n.valid() || n.value() >= slots_.size())
        throw graph_error("unknown node id");
    touch(n);
    return slots_[n.value()];
}

Graph::Slot& Graph::live_slot(NodeId n) {
    Slot& s = slot(n);
    if (!s.live)
        throw graph_error("node " + std::to_string(n.value()) + " is not alive");
    return s;
}

const Graph::Slot& Graph::live_slot(NodeId n) const {
    const Slot& s = slot(n);
    if (!s.live)
        throw graph_error("node " + std::to_string(n.value()) + " is not alive");
    return s;
}

void Graph::touch(NodeId n) const {
    if (!logging_)
        return;
    if (touched_.size() < slots_.size())
        touched_.resize(slots_.size(), false);
    if (n.value() < touched_.size() && !touched_[n.value()]) {
        touched_[n.value()] = true;
        touch_log_.push_back(n);
    }
}

void Graph::begin_touch_log() {
    touch_log_.clear();
    touched_.assign(slots_.size(), false);
    logging_ = true;
}

std::vector<NodeId> Graph::end_touch_log() {
    logging_ = false;
    std::vector<NodeId> out = std::move(touch_log_);
    touch_log_.clear();
    touched_.clear();
    return out;
}

void Graph::add_pred(NodeId child, NodeId parent, std::uint32_t index) {
    slot(child).preds.push_back(PredEdge{parent, index});
    ++writes_.pred_writes;
}

void Graph::drop_pred(NodeId child, NodeId parent, std::uint32_t index) {
    auto& preds = slot(child).preds;
    auto it = std::find(preds.begin(), preds.end(), PredEdge{parent, index});
    assert(it != preds.end() && "predecessor bookkeeping out of sync");
    *it = preds.back();
    preds.pop_back();
    ++writes_.pred_writes;
}

void Graph::unlink_dominator(NodeId n) {
    Slot& s = slot(n);
    if (!s.dominator)
        return;
    auto& siblings = slot(*s.dominator).dominated;
    auto it = std::find(siblings.begin(), siblings.end(), n);
    assert(it != siblings.end() && "dominator index out of sync");
    *it = siblings.back();
    siblings.pop_back();
    s.dominator.reset();
}

NodeId Graph::add_node(const Symbol* label, std::span<const NodeId> successors) {
    if (label == nullptr)
        throw graph_error("node label must not be null");
    if (static_cast<int>(successors.size()) != label->arity())
        throw graph_error("arity mismatch: '" + label->name() + "' takes " +
                          std::to_string(label->arity()) + " successors, got " +
                          std::to_string(successors.size()));
    for (NodeId s : successors)
        live_slot(s);

    NodeId n(static_cast<std::uint32_t>(slots_.size()));
    slots_.emplace_back();
    Slot& sl = slots_.back();
    sl.label = label;
    sl.live = true;
    sl.successors.assign(successors.begin(), successors.end());
    ++live_count_;
    ++writes_.label_writes;
    writes_.successor_writes += successors.size();
    touch(n);
    for (std::uint32_t i = 0; i < successors.size(); ++i)
        add_pred(successors[i], n, i);
    if (!root_.valid())
        root_ = n;
    return n;
}

NodeId Graph::add_node(const Symbol* label, std::initializer_list<NodeId> successors) {
    return add_node(label, std::span<const NodeId>(successors.begin(), successors.size()));
}

NodeId Graph::add_node_reserved(const Symbol* label) {
    if (label == nullptr)
        throw graph_error("node label must not be null");
    NodeId n(static_cast<std::uint32_t>(slots_.size()));
    slots_.emplace_back();
    Slot& sl = slots_.back();
    sl.label = label;
    sl.live = true;
    ++live_count_;
    ++writes_.label_writes;
    touch(n);
    if (!root_.valid())
        root_ = n;
    return n;
}

void Graph::append_successor(NodeId n, NodeId child) {
    Slot& sl = live_slot(n);
    if (static_cast<int>(sl.successors.size()) >= sl.label->arity())
        throw graph_error("appending successor beyond arity of '" + sl.label->name() + "'");
    std::uint32_t index = static_cast<std::uint32_t>(sl.successors.size());
    sl.successors.push_back(child);
    ++writes_.successor_writes;
    add_pred(child, n, index);
}

void Graph::set_successor(NodeId parent, std::uint32_t index, NodeId child) {
    Slot& sl = live_slot(parent);
    if (index >= sl.successors.size())
        throw graph_error("successor index out of range");
    NodeId old = sl.successors[index];
    if (old == child)
        return;
    drop_pred(old, parent, index);
    sl.successors[index] = child;
    ++writes_.successor_writes;
    add_pred(child, parent, index);
}

NodeId Graph::clone_shell(NodeId n) {
    const Slot& src = live_slot(n);
    NodeId fresh(static_cast<std::uint32_t>(slots_.size()));
    slots_.emplace_back();
    Slot& sl = slots_.back();
    const Slot& srcAgain = slots_[n.value()]; // emplace_back may reallocate
    sl.label = srcAgain.label;
    sl.live = true;
    sl.successors = srcAgain.successors;
    ++live_count_;
    ++writes_.label_writes;
    writes_.successor_writes += sl.successors.size();
    touch(fresh);
    for (std::uint32_t i = 0; i < sl.successors.size(); ++i)
        add_pred(sl.successors[i], fresh, i);
    (void)src;
    return fresh;
}

void Graph::set_root(NodeId n) {
    live_slot(n);
    root_ = n;
}

bool Graph::alive(NodeId n) const {
    if (!n.valid() || n.value() >= slots_.size())
        return false;
    return slots_[n.value()].live;
}

const Symbol* Graph::label(NodeId n) const { return live_slot(n).label; }

std::span<const NodeId> Graph::successors(NodeId n) const {
    const auto& v = live_slot(n).successors;
    return {v.data(), v.size()};
}

NodeId Graph::successor(NodeId n, std::uint32_t index) const {
    const auto& v = live_slot(n).successors;
    if (index >= v.size())
        throw graph_error("successor index out of range");
    return v[index];
}

std::span<const PredEdge> Graph::predecessors(NodeId n) const {
    const auto& v = live_slot(n).preds;
    return {v.data(), v.size()};
}

std::optional<NodeId> Graph::dominator(NodeId n) const { return live_slot(n).dominator; }

std::span<const NodeId> Graph::dominated_by(NodeId n) const {
    // Deliberately tolerates dead nodes: a rewrite consults the inverse sets
    // of erased nodes while repairing the attribute.
    const auto& v = slot(n).dominated;
    return {v.data(), v.size()};
}

void Graph::set_dominator(NodeId n, NodeId d) {
    if (n == d)
        throw graph_error("a node cannot be its own dominator");
    live_slot(d);
    Slot& sl = live_slot(n);
    if (sl.dominator && *sl.dominator == d)
        return;
    unlink_dominator(n);
    sl.dominator = d;
    slot(d).dominated.push_back(n);
    ++writes_.dominator_writes;
}

void Graph::clear_dominator(NodeId n) {
    live_slot(n);
    unlink_dominator(n);
    ++writes_.dominator_writes;
}

void Graph::redirect_incoming(NodeId p, NodeId q) {
    if (p == q)
        throw graph_error("cannot redirect a node to itself");
    Slot& ps = live_slot(p);
    live_slot(q);
#ifndef NDEBUG
    if (!logging_) {
        for (const PredEdge& e : ps.preds)
            assert(!reaches(q, e.from) && "redirect would create a cycle");
    }
#endif
    std::vector<PredEdge> incoming = std::move(ps.preds);
    ps.preds.clear();
    writes_.pred_writes += incoming.size();
    for (const PredEdge& e : incoming) {
        Slot& from = live_slot(e.from);
        assert(from.successors[e.index] == p);
        from.successors[e.index] = q;
        ++writes_.successor_writes;
        add_pred(q, e.from, e.index);
    }
}

void Graph::replace(NodeId p, NodeId q) {
    bool was_root = (p == root_);
    std::optional<NodeId> pdom = live_slot(p).dominator;
    redirect_incoming(p, q);
    if (was_root) {
        root_ = q;
        clear_dominator(q);
    } else if (pdom) {
        set_dominator(q, *pdom);
    }
}

void Graph::remove_node(NodeId n) {
    Slot& sl = live_slot(n);
    if (!sl.preds.empty())
        throw graph_error("removing a node that still has incoming edges");
    if (n == root_)
        throw graph_error("cannot remove the root");
    for (std::uint32_t i = 0; i < sl.successors.size(); ++i)
        drop_pred(sl.successors[i], n, i);
    unlink_dominator(n);
    // The node's own inverse-dominator list is kept: survivors that still
    // store this node are repaired by the caller (rewrite step) afterwards.
    sl.live = false;
    --live_count_;
}

std::vector<NodeId> Graph::cascade_unreachable(NodeId seed) {
    std::vector<NodeId> removed;
    std::vector<NodeId> work{seed};
    while (!work.empty()) {
        NodeId n = work.back();
        work.pop_back();
        if (!alive(n) || n == root_)
            continue;
        if (!slots_[n.value()].preds.empty())
            continue;
        touch(n);
        std::vector<NodeId> children = slots_[n.value()].successors;
        remove_node(n);
        removed.push_back(n);
        for (NodeId c : children)
            if (alive(c) && slots_[c.value()].preds.empty() && c != root_)
                work.push_back(c);
    }
    return removed;
}

std::vector<NodeId> Graph::gc() {
    std::vector<bool> reached(slots_.size(), false);
    if (root_.valid() && alive(root_)) {
        std::vector<NodeId> work{root_};
        reached[root_.value()] = true;
        while (!work.empty()) {
            NodeId n = work.back();
            work.pop_back();
            for (NodeId s : slots_[n.value()].successors)
                if (!reached[s.value()]) {
                    reached[s.value()] = true;
                    work.push_back(s);
                }
        }
    }
    std::vector<NodeId> removed;
    for (std::uint32_t i = 0; i < slots_.size(); ++i) {
        if (slots_[i].live && !reached[i]) {
            slots_[i].live = false;
            --live_count_;
            removed.push_back(NodeId(i));
        }
    }
    if (removed.empty())
        return removed;
    // Scrub dead entries from survivors' edge and dominator bookkeeping.
    for (std::uint32_t i = 0; i < slots_.size(); ++i) {
        Slot& sl = slots_[i];
        if (!sl.live)
            continue;
        std::erase_if(sl.preds, [&](const PredEdge& e) { return !slots_[e.from.value()].live; });
        std::erase_if(sl.dominated, [&](NodeId d) { return !slots_[d.value()].live; });
        if (sl.dominator && !slots_[sl.dominator->value()].live)
            sl.dominator.reset();
    }
    return removed;
}

bool Graph::reaches(NodeId from, NodeId to) const {
    if (!alive(from) || !alive(to))
        return false;
    if (from == to)
        return true;
    std::vector<bool> seen(slots_.size(), false);
    std::vector<NodeId> work{from};
    seen[from.value()] = true;
    while (!work.empty()) {
        NodeId n = work.back();
        work.pop_back();
        for (NodeId s : slots_[n.value()].successors) {
            if (s == to)
                return true;
            if (!seen[s.value()]) {
                seen[s.value()] = true;
                work.push_back(s);
            }
        }
    }
    return false;
}

namespace {

// Copies the subgraph reachable from src_root into dst (fresh ids, shared
// Symbol pointers), returning the mapping. Successor order is preserved.
void copy_subgraph(const Graph& src, NodeId src_root, Graph& dst,
                   std::unordered_map<std::uint32_t, NodeId>& map) {
    struct Frame {
        NodeId node;
        std::uint32_t next = 0;
    };
    std::vector<Frame> stack{{src_root}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto succ = src.successors(f.node);
        if (f.next < succ.size()) {
            NodeId child = succ[f.next++];
            if (!map.count(child.value()))
                stack.push_back({child});
            continue;
        }
        if (!map.count(f.node.value())) {
            std::vector<NodeId> mapped;
            mapped.reserve(succ.size());
            for (NodeId c : succ)
                mapped.push_back(map.at(c.value()));
            map.emplace(f.node.value(), dst.add_node(src.label(f.node), mapped));
        }
        stack.pop_back();
    }
}

} // namespace

Graph Graph::extract_alternative(ChoiceSide side) const {
    if (!root_.valid())
        throw graph_error("empty graph");
    if (!label(root_)->is_choice())
        throw graph_error("extract_alternative requires a choice-rooted graph");
    NodeId alt = successor(root_, static_cast<std::uint32_t>(side));

    Graph out;
    std::unordered_map<std::uint32_t, NodeId> map;
    copy_subgraph(*this, alt, out, map);
    out.set_root(map.at(alt.value()));

    for (const auto& [orig_value, copy] : map) {
        NodeId orig(orig_value);
        if (orig == alt)
            continue;
        std::optional<NodeId> d = dominator(orig);
        if (d && map.count(d->value()))
            out.set_dominator(copy, map.at(d->value()));
        else
            out.set_dominator(copy, out.root());
    }
    return out;
}

Graph Graph::clone(std::unordered_map<std::uint32_t, NodeId>* out_map) const {
    Graph out;
    std::unordered_map<std::uint32_t, NodeId> map;
    if (root_.valid()) {
        copy_subgraph(*this, root_, out, map);
        out.set_root(map.at(root_.value()));
        for (const auto& [orig_value, copy] : map) {
            NodeId orig(orig_value);
            if (orig == root_)
                continue;
            std::optional<NodeId> d = dominator(orig);
            if (d && map.count(d->value()))
                out.set_dominator(copy, map.at(d->value()));
            else
                out.set_dominator(copy, out.root());
        }
    }
    if (out_map)
        *out_map = std::move(map);
    return out;
}

std::vector<NodeId> Graph::live_nodes() const {
    std::vector<NodeId> out;
    out.reserve(live_count_);
    for (std::uint32_t i = 0; i < slots_.size(); ++i)
        if (slots_[i].live)
            out.push_back(NodeId(i));
    return out;
}

GraphCheck check_structure(const Graph& g, bool require_fully_reachable) {
    GraphCheck check;
    auto fail = [&](std::string msg) {
        check.ok = false;
        check.problems.push_back(std::move(msg));
    };

    std::vector<NodeId> live = g.live_nodes();
    if (!g.root().valid() || !g.alive(g.root())) {
        fail("root is missing or dead");
        return check;
    }
    if (g.dominator(g.root()))
        fail("root must not carry a dominator");

    std::unordered_map<NodeId, std::vector<PredEdge>> expected;
    for (NodeId n : live) {
        const Symbol* sym = g.label(n);
        auto succ = g.successors(n);
        if (static_cast<int>(succ.size()) != sym->arity())
            fail("node " + std::to_string(n.value()) + " has " + std::to_string(succ.size()) +
                 " successors but '" + sym->name() + "' has arity " + std::to_string(sym->arity()));
        for (std::uint32_t i = 0; i < succ.size(); ++i) {
            if (!g.alive(succ[i])) {
                fail("node " + std::to_string(n.value()) + " points at dead node " +
                     std::to_string(succ[i].value()));
                continue;
            }
            expected[succ[i]].push_back(PredEdge{n, i});
        }
    }

    auto edge_less = [](const PredEdge& a, const PredEdge& b) {
        return a.from.value() != b.from.value() ? a.from.value() < b.from.value()
                                                : a.index < b.index;
    };
    for (NodeId n : live) {
        auto preds = g.predecessors(n);
        std::vector<PredEdge> have(preds.begin(), preds.end());
        std::vector<PredEdge> want = expected.count(n) ? expected[n] : std::vector<PredEdge>{};
        std::sort(have.begin(), have.end(), edge_less);
        std::sort(want.begin(), want.end(), edge_less);
        if (have != want)
            fail("predecessor multiset of node " + std::to_string(n.value()) +
                 " disagrees with successor arrays");
    }

    for (NodeId n : live) {
        std::optional<NodeId> d = g.dominator(n);
        if (n == g.root())
            continue;
        if (!d) {
            fail("non-root node " + std::to_string(n.value()) + " has no dominator");
            continue;
        }
        if (!g.alive(*d))
            fail("node " + std::to_string(n.value()) + " stores dead dominator " +
                 std::to_string(d->value()));
        else {
            auto inv = g.dominated_by(*d);
            if (std::count(inv.begin(), inv.end(), n) != 1)
                fail("inverse-dominator index misses node " + std::to_string(n.value()));
        }
    }
    for (NodeId n : live) {
        for (NodeId z : g.dominated_by(n)) {
            if (!g.alive(z))
                fail("inverse-dominator list of live node " + std::to_string(n.value()) +
                     " holds dead node " + std::to_string(z.value()));
            else if (!g.dominator(z) || *g.dominator(z) != n)
                fail("inverse-dominator list of node " + std::to_string(n.value()) +
                     " holds mismatched node " + std::to_string(z.value()));
        }
    }

    // Acyclicity via iterative three-color DFS.
    enum : unsigned char { White, Grey, Black };
    std::unordered_map<NodeId, unsigned char> color;
    for (NodeId start : live) {
        if (color.count(start) && color[start] == Black)
            continue;
        std::vector<std::pair<NodeId, std::uint32_t>> stack{{start, 0}};
        color[start] = Grey;
        while (!stack.empty()) {
            auto& [n, next] = stack.back();
            auto succ = g.successors(n);
            if (next < succ.size()) {
                NodeId c = succ[next++];
                unsigned char col = color.count(c) ? color[c] : static_cast<unsigned char>(White);
                if (col == Grey) {
                    fail("cycle through node " + std::to_string(c.value()));
                    color[c] = Black;
                } else if (col == White) {
                    color[c] = Grey;
                    stack.push_back({c, 0});
                }
                continue;
            }
            color[n] = Black;
            stack.pop_back();
        }
    }

    if (require_fully_reachable) {
        std::unordered_map<NodeId, bool> seen;
        std::vector<NodeId> work{g.root()};
        seen[g.root()] = true;
        while (!work.empty()) {
            NodeId n = work.back();
            work.pop_back();
            for (NodeId s : g.successors(n))
                if (!seen[s]) {
                    seen[s] = true;
                    work.push_back(s);
                }
        }
        for (NodeId n : live)
            if (!seen[n])
                fail("unreachable live node " + std::to_string(n.value()));
    }
    return check;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (!a.root().valid() || !b.root().valid())
        return a.root().valid() == b.root().valid();
    std::unordered_map<NodeId, NodeId> fwd, bwd;
    std::vector<std::pair<NodeId, NodeId>> work{{a.root(), b.root()}};
    fwd[a.root()] = b.root();
    bwd[b.root()] = a.root();
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        const Symbol* lx = a.label(x);
        const Symbol* ly = b.label(y);
        if (lx->name() != ly->name() || lx->kind() != ly->kind() || lx->arity() != ly->arity())
            return false;
        auto sx = a.successors(x);
        auto sy = b.successors(y);
        if (sx.size() != sy.size())
            return false;
        for (std::size_t i = 0; i < sx.size(); ++i) {
            auto fit = fwd.find(sx[i]);
            auto bit = bwd.find(sy[i]);
            if (fit == fwd.end() && bit == bwd.end()) {
                fwd[sx[i]] = sy[i];
                bwd[sy[i]] = sx[i];
                work.push_back({sx[i], sy[i]});
            } else if (fit == fwd.end() || bit == bwd.end() || fit->second != sy[i] ||
                       bit->second != sx[i]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace bubbly
