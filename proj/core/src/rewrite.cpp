#include "bubbly/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <unordered_set>

#include "bubbly/dominance.hpp"

namespace bubbly {

namespace {

struct Matcher {
    const Graph& g;
    Match m;
    std::optional<Demand> demand;
    std::unordered_set<NodeId> pattern_set;

    void note_pattern(NodeId n) {
        if (pattern_set.insert(n).second)
            m.pattern.push_back(n);
    }

    // false = definitive constructor mismatch.
    bool walk(const Pattern& pat, NodeId node) {
        if (pat.is_var) {
            if (pat.var != "_")
                m.bindings.emplace(pat.var, node);
            return true;
        }
        const Symbol* lab = g.label(node);
        if (lab != pat.sym) {
            if (lab->is_constructor())
                return false;
            if (!demand)
                demand = Demand{node}; // operation or choice where a constructor is needed
            return true;
        }
        note_pattern(node);
        auto succ = g.successors(node);
        for (std::size_t i = 0; i < pat.args.size(); ++i)
            if (!walk(pat.args[i], succ[i]))
                return false;
        return true;
    }
};

} // namespace

MatchResult match_rule(const Graph& g, NodeId n, const Rule& rule) {
    if (g.label(n) != rule.op)
        throw graph_error("match_rule: node is labeled '" + g.label(n)->name() +
                          "', rule is for '" + rule.op->name() + "'");
    Matcher matcher{g, {}, {}, {}};
    matcher.note_pattern(n);
    auto succ = g.successors(n);
    for (std::size_t i = 0; i < rule.params.size(); ++i)
        if (!matcher.walk(rule.params[i], succ[i]))
            return NoMatch{};
    if (matcher.demand)
        return *matcher.demand;
    return std::move(matcher.m);
}

namespace {

// Shared tail of rewrite_at and builtin_step. `e` is the contractum root,
// already built; nothing else has been mutated yet. `pattern` holds the
// redex-pattern candidates (redex first), `fresh` the contractum's new nodes.
RewriteResult apply_replacement(Graph& g, NodeId at, NodeId e, std::vector<NodeId> pattern,
                                std::vector<NodeId> fresh, bool collapsing) {
    bool was_root = (at == g.root());
    std::optional<NodeId> old_redex_dom = g.dominator(at);

    // Anchors: pre-existing nodes the contractum points at (the rule's
    // variable bindings). They gain paths that enter through the contractum
    // root, so their dominator moves to the meet of two pre-step chains: the
    // anchor's own (covering the old paths) and the redex's (covering every
    // new one, whose prefix is an old path to the redex). The chain segment
    // below that meet is bypassed by the new paths, so anything whose stored
    // dominator sits on it moves to the meet as well. When the redex is the
    // root, every surviving path runs through the contractum root instead.
    std::unordered_set<NodeId> fresh_set(fresh.begin(), fresh.end());
    std::vector<NodeId> anchors;
    {
        std::unordered_set<NodeId> seen;
        for (NodeId x : fresh)
            for (NodeId s : g.successors(x))
                if (!fresh_set.count(s) && s != e && seen.insert(s).second)
                    anchors.push_back(s);
        if (collapsing)
            anchors.push_back(e); // the contractum root itself is an old node
    }
    struct AnchorFix {
        NodeId node;
        NodeId target;
        std::vector<NodeId> bypassed;
    };
    std::vector<AnchorFix> anchor_fixes;
    for (NodeId z : anchors) {
        AnchorFix fx;
        fx.node = z;
        NodeId stop; // first chain element that keeps dominating
        if (was_root) {
            fx.target = e;
            stop = at; // pre-step chains terminate at the old root
        } else {
            stop = chain_meet(g, *g.dominator(z), *old_redex_dom);
            fx.target = stop;
        }
        for (NodeId b = *g.dominator(z); b != stop; b = *g.dominator(b))
            fx.bypassed.push_back(b);
        anchor_fixes.push_back(std::move(fx));
    }

    g.redirect_incoming(at, e);
    if (was_root) {
        g.set_root(e);
        if (g.dominator(e))
            g.clear_dominator(e); // a collapsing step can promote an old node
    }

    // The redex lost its last incoming edge; everything that drains with it
    // is exactly the region a full sweep would reclaim.
    std::vector<NodeId> removed = g.cascade_unreachable(at);
    std::unordered_set<NodeId> removed_set(removed.begin(), removed.end());
    std::vector<NodeId> erased;
    for (NodeId p : pattern)
        if (removed_set.count(p))
            erased.push_back(p);

    // Re-point the anchors and everything held by their bypassed segments.
    std::optional<NodeId> e_target;
    for (const AnchorFix& fx : anchor_fixes) {
        if (fx.node == e)
            e_target = fx.target; // assigned below with the contractum root
        else if (g.alive(fx.node))
            g.set_dominator(fx.node, fx.target);
        for (NodeId b : fx.bypassed) {
            if (!g.alive(b))
                continue; // handled with the removed nodes
            auto span = g.dominated_by(b);
            std::vector<NodeId> holders(span.begin(), span.end());
            for (NodeId u : holders)
                if (g.alive(u) && u != e)
                    g.set_dominator(u, fx.target);
        }
    }

    // Survivors whose stored dominator went away answer to the contractum
    // root now; their only remaining paths run through it.
    for (NodeId p : removed) {
        auto span = g.dominated_by(p);
        std::vector<NodeId> holders(span.begin(), span.end());
        for (NodeId z : holders)
            if (g.alive(z) && z != e)
                g.set_dominator(z, e);
    }

    // Fresh right-hand-side nodes hang below the contractum root.
    for (NodeId x : fresh)
        if (x != e)
            g.set_dominator(x, e);

    // The contractum root inherits the redex's place.
    if (!was_root) {
        if (collapsing)
            g.set_dominator(e, *e_target);
        else
            g.set_dominator(e, *old_redex_dom);
    }

    RewriteResult out;
    out.contractum = e;
    out.fresh = std::move(fresh);
    out.erased = std::move(erased);
    out.collapsing = collapsing;
    return out;
}

} // namespace

RewriteResult rewrite_at(Graph& g, NodeId at, const Rule& rule, const Match& m) {
    if (g.label(at) != rule.op)
        throw graph_error("rewrite_at: rule does not apply to this node");

    Instantiation inst = instantiate(g, rule.rhs, m.bindings);
    NodeId e = inst.root;
    bool collapsing =
        std::find(inst.fresh.begin(), inst.fresh.end(), e) == inst.fresh.end();
    assert(e != at && "contractum root cannot be the redex");

    return apply_replacement(g, at, e, m.pattern, std::move(inst.fresh), collapsing);
}

RewriteResult builtin_step(Graph& g, NodeId at, const Symbol* result) {
    if (!g.label(at)->builtin())
        throw graph_error("builtin_step: node is not a builtin operation");
    std::vector<NodeId> pattern;
    pattern.push_back(at);
    for (NodeId s : g.successors(at))
        pattern.push_back(s); // demanded literal leaves
    NodeId e = g.add_node(result, {});
    return apply_replacement(g, at, e, std::move(pattern), {e}, false);
}

std::optional<const Symbol*> eval_builtin(SymbolTable& syms, const Symbol* op, const Symbol* a,
                                          const Symbol* b) {
    if (!a->literal() || !b->literal())
        return std::nullopt;
    long long x = *a->literal();
    long long y = *b->literal();
    const std::string& name = op->name();
    if (name == ">")
        return x > y ? syms.true_sym() : syms.false_sym();
    if (name == "<")
        return x < y ? syms.true_sym() : syms.false_sym();
    if (name == "==")
        return x == y ? syms.true_sym() : syms.false_sym();

    long long r = 0;
    if (name == "+") {
        if (__builtin_add_overflow(x, y, &r))
            return std::nullopt;
    } else if (name == "-") {
        if (__builtin_sub_overflow(x, y, &r))
            return std::nullopt;
    } else if (name == "*") {
        if (__builtin_mul_overflow(x, y, &r))
            return std::nullopt;
    } else if (name == "/") {
        if (y == 0 || (x == std::numeric_limits<long long>::min() && y == -1))
            return std::nullopt;
        r = x / y;
    } else if (name == "^") {
        if (y < 0)
            return std::nullopt;
        long long base = x;
        long long exp = y;
        r = 1;
        while (exp > 0) {
            if (exp & 1) {
                if (__builtin_mul_overflow(r, base, &r))
                    return std::nullopt;
            }
            exp >>= 1;
            if (exp > 0 && __builtin_mul_overflow(base, base, &base))
                return std::nullopt;
        }
    } else {
        throw graph_error("unknown builtin '" + name + "'");
    }
    return syms.literal(r);
}

} // namespace bubbly
