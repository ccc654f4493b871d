#include <set>

#include "doctest.h"

#include "bubbly/dominance.hpp"
#include "bubbly/graph.hpp"
#include "bubbly/symbols.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bubbly;

namespace {

struct Diamond {
    SymbolTable syms;
    Graph g;
    NodeId bottom, left, right, top;

    Diamond() {
        const Symbol* u = syms.intern("u", SymbolKind::Operation, 1);
        const Symbol* f = syms.intern("f", SymbolKind::Operation, 2);
        bottom = g.add_node(syms.literal(0), {});
        left = g.add_node(u, {bottom});
        right = g.add_node(u, {bottom});
        top = g.add_node(f, {left, right});
        g.set_root(top);
    }
};

} // namespace

TEST_CASE("dominates: diamond joins escape either branch") {
    Diamond d;
    CHECK(dominates(d.g, d.top, d.bottom));
    CHECK(dominates(d.g, d.top, d.left));
    CHECK(!dominates(d.g, d.left, d.bottom));
    CHECK(!dominates(d.g, d.right, d.bottom));
    CHECK(!dominates(d.g, d.bottom, d.bottom)); // proper: never itself
    CHECK(!dominates(d.g, d.bottom, d.top));
}

TEST_CASE("immediate dominator on a chain is the parent") {
    SymbolTable syms;
    const Symbol* u = syms.intern("u", SymbolKind::Operation, 1);
    Graph g;
    NodeId c = g.add_node(syms.literal(0), {});
    NodeId b = g.add_node(u, {c});
    NodeId a = g.add_node(u, {b});
    g.set_root(a);

    CHECK(immediate_dominator(g, c) == b);
    CHECK(immediate_dominator(g, b) == a);
    CHECK_THROWS_AS(immediate_dominator(g, a), graph_error); // root has none

    auto sets = dominator_sets(g);
    CHECK(std::set<NodeId>(sets[c.value()].begin(), sets[c.value()].end()) ==
          std::set<NodeId>{a, b});
}

TEST_CASE("immediate dominator of a diamond join is the fork") {
    Diamond d;
    CHECK(immediate_dominator(d.g, d.bottom) == d.top);
    auto all = immediate_dominators(d.g);
    CHECK(*all[d.bottom.value()] == d.top);
    CHECK(*all[d.left.value()] == d.top);
    CHECK(!all[d.top.value()]);
}

TEST_CASE("dominator sets agree with brute-force path enumeration") {
    using namespace bubbly::testing;
    Rng rng(seed_from_env(11));
    for (int trial = 0; trial < 60; ++trial) {
        SymbolTable syms;
        Graph g = random_graph(rng, syms, 10, 0.0);
        auto sets = dominator_sets(g);
        for (NodeId n : g.live_nodes()) {
            if (n == g.root())
                continue;
            std::set<NodeId> fast(sets[n.value()].begin(), sets[n.value()].end());
            std::set<NodeId> slow = dominators_by_paths(g, n);
            slow.erase(g.root());
            fast.erase(g.root()); // both must contain it; compare the rest too
            CHECK(dominators_by_paths(g, n).count(g.root()) == 1);
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("validate_attribute accepts sound attributes, immediate or not") {
    Diamond d;
    d.g.set_dominator(d.left, d.top);
    d.g.set_dominator(d.right, d.top);
    d.g.set_dominator(d.bottom, d.top);
    CHECK(validate_attribute(d.g).ok);

    SUBCASE("a loose but proper dominator is fine") {
        SymbolTable syms;
        const Symbol* u = syms.intern("u", SymbolKind::Operation, 1);
        Graph g;
        NodeId c = g.add_node(syms.literal(0), {});
        NodeId b = g.add_node(u, {c});
        NodeId a = g.add_node(u, {b});
        g.set_root(a);
        g.set_dominator(b, a);
        g.set_dominator(c, a); // not the immediate dominator (b), still sound
        auto rep = validate_attribute(g);
        CHECK(rep.ok);
        for (const auto& e : rep.entries)
            if (e.node == c)
                CHECK(*e.immediate == b);
    }
    SUBCASE("a non-dominator is rejected") {
        d.g.set_dominator(d.bottom, d.left); // left does not dominate bottom
        auto rep = validate_attribute(d.g);
        CHECK(!rep.ok);
        CHECK(!rep.problems.empty());
    }
    SUBCASE("a missing attribute on a non-root node is rejected") {
        d.g.clear_dominator(d.left);
        CHECK(!validate_attribute(d.g).ok);
    }
    SUBCASE("a dominator on the root is rejected") {
        d.g.set_dominator(d.top, d.left);
        CHECK(!validate_attribute(d.g).ok);
    }
}

TEST_CASE("chain_meet finds the deepest shared entry of two chains") {
    SymbolTable syms;
    const Symbol* u = syms.intern("u", SymbolKind::Operation, 1);
    const Symbol* f = syms.intern("f", SymbolKind::Operation, 2);
    Graph g;
    NodeId x = g.add_node(syms.literal(0), {});
    NodeId l2 = g.add_node(u, {x});
    NodeId l1 = g.add_node(u, {l2});
    NodeId r1 = g.add_node(u, {x});
    NodeId top = g.add_node(f, {l1, r1});
    g.set_root(top);
    initialize_dominators(g);

    CHECK(chain_meet(g, l2, r1) == top);
    CHECK(chain_meet(g, l2, l1) == l1); // one argument on the other's chain
    CHECK(chain_meet(g, l1, l2) == l1);
    CHECK(chain_meet(g, x, x) == x);
    CHECK(chain_meet(g, l2, top) == top);
}

TEST_CASE("initialize_dominators assigns the immediate dominator everywhere") {
    using namespace bubbly::testing;
    Rng rng(seed_from_env(12));
    for (int trial = 0; trial < 40; ++trial) {
        SymbolTable syms;
        Graph g = random_graph(rng, syms, 14, 0.0); // construction initializes
        auto idom = immediate_dominators(g);
        for (NodeId n : g.live_nodes()) {
            if (n == g.root()) {
                CHECK(!g.dominator(n));
                continue;
            }
            REQUIRE(g.dominator(n));
            CHECK(*g.dominator(n) == *idom[n.value()]);
        }
        CHECK(validate_attribute(g).ok);
    }
}

TEST_CASE("sloppy attributes from the generator stay sound") {
    using namespace bubbly::testing;
    Rng rng(seed_from_env(13));
    int loose = 0;
    for (int trial = 0; trial < 40; ++trial) {
        SymbolTable syms;
        Graph g = random_graph(rng, syms, 14, 0.7);
        CHECK(validate_attribute(g).ok);
        auto idom = immediate_dominators(g);
        for (NodeId n : g.live_nodes())
            if (n != g.root() && *g.dominator(n) != *idom[n.value()])
                ++loose;
    }
    CHECK(loose > 0); // the generator really does produce non-immediate ones
}
