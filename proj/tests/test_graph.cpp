#include <set>

#include "doctest.h"

#include "bubbly/dot.hpp"
#include "bubbly/graph.hpp"
#include "bubbly/symbols.hpp"

using namespace bubbly;

namespace {

struct Fixture {
    SymbolTable syms;
    const Symbol* f = syms.intern("f", SymbolKind::Operation, 2);
    const Symbol* u = syms.intern("u", SymbolKind::Operation, 1);
    const Symbol* c2 = syms.intern("P", SymbolKind::Constructor, 2);
    const Symbol* lit(int v) { return syms.literal(v); }
};

} // namespace

TEST_CASE("node creation, access and the root") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId b = g.add_node(fx.lit(2), {});
    NodeId r = g.add_node(fx.f, {a, b});

    CHECK(g.root() == a); // first node added
    g.set_root(r);
    CHECK(g.root() == r);

    CHECK(g.label(r) == fx.f);
    CHECK(g.successor(r, 0) == a);
    CHECK(g.successor(r, 1) == b);
    CHECK(g.successors(r).size() == 2);
    REQUIRE(g.predecessors(a).size() == 1);
    CHECK(g.predecessors(a)[0].from == r);
    CHECK(g.predecessors(a)[0].index == 0);
    CHECK(g.live_count() == 3);

    CHECK_THROWS_AS(g.add_node(fx.f, {a}), graph_error); // arity mismatch
}

TEST_CASE("parallel edges appear once per slot in the predecessor list") {
    Fixture fx;
    Graph g;
    NodeId x = g.add_node(fx.lit(7), {});
    NodeId r = g.add_node(fx.f, {x, x});
    g.set_root(r);
    REQUIRE(g.predecessors(x).size() == 2);
    CHECK(g.predecessors(x)[0].from == r);
    CHECK(g.predecessors(x)[1].from == r);
    std::set<std::uint32_t> slots{g.predecessors(x)[0].index, g.predecessors(x)[1].index};
    CHECK(slots == std::set<std::uint32_t>{0, 1});
}

TEST_CASE("dominator attribute and its inverse index") {
    Fixture fx;
    Graph g;
    NodeId x = g.add_node(fx.lit(3), {});
    NodeId m = g.add_node(fx.u, {x});
    NodeId r = g.add_node(fx.u, {m});
    g.set_root(r);

    CHECK(!g.dominator(x));
    g.set_dominator(x, m);
    g.set_dominator(m, r);
    REQUIRE(g.dominator(x));
    CHECK(*g.dominator(x) == m);
    REQUIRE(g.dominated_by(m).size() == 1);
    CHECK(g.dominated_by(m)[0] == x);

    g.set_dominator(x, r); // re-point: inverse index must follow
    CHECK(g.dominated_by(m).empty());
    std::set<NodeId> of_r(g.dominated_by(r).begin(), g.dominated_by(r).end());
    CHECK(of_r == std::set<NodeId>{x, m});

    g.clear_dominator(x);
    CHECK(!g.dominator(x));
    CHECK(g.dominated_by(r).size() == 1);

    CHECK_THROWS_AS(g.set_dominator(x, x), graph_error);
}

TEST_CASE("replace redirects incoming edges and transfers rootness") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId b = g.add_node(fx.lit(2), {});
    NodeId p = g.add_node(fx.f, {a, b});
    NodeId r = g.add_node(fx.u, {p});
    g.set_root(r);
    g.set_dominator(p, r);
    g.set_dominator(a, p);
    g.set_dominator(b, p);

    SUBCASE("interior node: the replacement inherits the dominator") {
        g.replace(p, a);
        CHECK(g.successor(r, 0) == a);
        REQUIRE(g.dominator(a));
        CHECK(*g.dominator(a) == r);
        CHECK(g.predecessors(p).empty());
    }
    SUBCASE("root: rootness moves and the new root loses its dominator") {
        g.replace(r, p);
        CHECK(g.root() == p);
        CHECK(!g.dominator(p));
    }
}

TEST_CASE("redirect_incoming leaves the dominator attribute untouched") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId q = g.add_node(fx.lit(9), {});
    NodeId r = g.add_node(fx.f, {a, a});
    g.set_root(r);
    g.set_dominator(a, r);
    g.set_dominator(q, r);

    g.redirect_incoming(a, q);
    CHECK(g.successor(r, 0) == q);
    CHECK(g.successor(r, 1) == q);
    REQUIRE(g.dominator(q));
    CHECK(*g.dominator(q) == r); // untouched, not overwritten
    CHECK(g.predecessors(a).empty());
    CHECK(g.predecessors(q).size() == 2);
}

TEST_CASE("remove_node refuses live references") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId r = g.add_node(fx.u, {a});
    g.set_root(r);
    CHECK_THROWS_AS(g.remove_node(a), graph_error); // has a predecessor
    CHECK_THROWS_AS(g.remove_node(r), graph_error); // is the root
}

TEST_CASE("cascade_unreachable removes exactly the orphaned region") {
    Fixture fx;
    Graph g;
    NodeId shared = g.add_node(fx.lit(5), {});
    NodeId inner = g.add_node(fx.u, {shared});
    NodeId dying = g.add_node(fx.f, {inner, shared});
    NodeId keep = g.add_node(fx.u, {shared});
    NodeId r = g.add_node(fx.f, {dying, keep});
    g.set_root(r);
    g.set_dominator(dying, r);
    g.set_dominator(keep, r);
    g.set_dominator(inner, dying);
    g.set_dominator(shared, r);

    // Drop the only edge into `dying`, then cascade from it.
    g.set_successor(r, 0, keep);
    auto removed = g.cascade_unreachable(dying);
    std::set<NodeId> gone(removed.begin(), removed.end());
    CHECK(gone == std::set<NodeId>{dying, inner});
    CHECK(g.alive(shared)); // still referenced by keep
    CHECK(g.alive(keep));
    CHECK(g.live_count() == 3);

    // Structure is intact afterwards.
    auto chk = check_structure(g);
    CHECK(chk.ok);
}

TEST_CASE("gc removes everything unreachable and is idempotent") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId orphan = g.add_node(fx.u, {a});
    NodeId r = g.add_node(fx.u, {a});
    g.set_root(r);

    auto removed = g.gc();
    CHECK(removed == std::vector<NodeId>{orphan});
    CHECK(g.gc().empty());
    CHECK(g.live_count() == 2);
}

TEST_CASE("gc scrubs dominators that point at removed nodes") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId dead = g.add_node(fx.u, {a});
    NodeId r = g.add_node(fx.u, {a});
    g.set_root(r);
    g.set_dominator(a, dead); // deliberately unsound bookkeeping
    g.gc();
    CHECK(!g.dominator(a)); // no dangling reference survives
}

TEST_CASE("clone preserves shape and sharing with fresh ids") {
    Fixture fx;
    Graph g;
    NodeId x = g.add_node(fx.lit(4), {});
    NodeId s = g.add_node(fx.u, {x});
    NodeId r = g.add_node(fx.f, {s, s});
    g.set_root(r);
    g.set_dominator(s, r);
    g.set_dominator(x, s);

    std::unordered_map<std::uint32_t, NodeId> map;
    Graph h = g.clone(&map);
    CHECK(isomorphic(g, h));
    CHECK(h.live_count() == 3);
    NodeId hs = map.at(s.value());
    REQUIRE(h.dominator(hs));
    CHECK(*h.dominator(hs) == map.at(r.value()));
    // Mutating the copy leaves the original alone.
    h.set_successor(h.root(), 1, map.at(x.value()));
    CHECK(g.successor(r, 1) == s);
}

TEST_CASE("extract_alternative pulls one side of a root choice") {
    Fixture fx;
    Graph g;
    NodeId one = g.add_node(fx.lit(1), {});
    NodeId two = g.add_node(fx.lit(2), {});
    NodeId inner = g.add_node(fx.u, {one});
    NodeId c = g.add_node(fx.syms.choice(), {inner, two});
    g.set_root(c);
    g.set_dominator(inner, c);
    g.set_dominator(one, inner);
    g.set_dominator(two, c);

    Graph left = g.extract_alternative(ChoiceSide::Left);
    Graph right = g.extract_alternative(ChoiceSide::Right);
    CHECK(left.live_count() == 2);
    CHECK(left.label(left.root()) == fx.u);
    CHECK(right.live_count() == 1);
    CHECK(right.label(right.root()) == fx.lit(2));
    // Dominators whose target survived are mapped; the root's is absent.
    CHECK(!left.dominator(left.root()));
    REQUIRE(left.dominator(left.successor(left.root(), 0)));
    CHECK(check_structure(left).ok);
    CHECK(check_structure(right).ok);
}

TEST_CASE("isomorphic distinguishes sharing and labels") {
    Fixture fx;
    Graph shared;
    NodeId x = shared.add_node(fx.lit(1), {});
    shared.set_root(shared.add_node(fx.f, {x, x}));

    Graph unshared;
    NodeId y1 = unshared.add_node(fx.lit(1), {});
    NodeId y2 = unshared.add_node(fx.lit(1), {});
    unshared.set_root(unshared.add_node(fx.f, {y1, y2}));

    CHECK(!isomorphic(shared, unshared));
    CHECK(isomorphic(shared, shared));

    Graph renamed; // same shape as `shared`, built in another order
    NodeId z = renamed.add_node(fx.lit(1), {});
    NodeId rr = renamed.add_node(fx.f, {z, z});
    renamed.set_root(rr);
    CHECK(isomorphic(shared, renamed));

    Graph other_label;
    NodeId w = other_label.add_node(fx.lit(2), {});
    other_label.set_root(other_label.add_node(fx.f, {w, w}));
    CHECK(!isomorphic(shared, other_label));
}

TEST_CASE("check_structure flags inconsistencies") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId r = g.add_node(fx.u, {a});
    g.set_root(r);
    CHECK(!check_structure(g).ok); // a has no dominator yet
    g.set_dominator(a, r);
    CHECK(check_structure(g).ok);

    Graph g2;
    NodeId b = g2.add_node(fx.lit(1), {});
    NodeId unreachable = g2.add_node(fx.u, {b});
    NodeId r2 = g2.add_node(fx.u, {b});
    g2.set_root(r2);
    g2.set_dominator(b, r2);
    g2.set_dominator(unreachable, r2);
    CHECK(!check_structure(g2).ok);                 // unreachable node
    CHECK(check_structure(g2, false).ok);           // tolerated when asked
}

TEST_CASE("write counters track mutations") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId r = g.add_node(fx.u, {a});
    g.set_root(r);
    WriteCounters before = g.write_counters();
    CHECK(before.label_writes == 2);
    CHECK(before.pred_writes >= 1);
    g.set_dominator(a, r);
    CHECK(g.write_counters().dominator_writes == before.dominator_writes + 1);
    g.set_dominator(a, r); // identical value: no write recorded
    CHECK(g.write_counters().dominator_writes == before.dominator_writes + 1);
}

TEST_CASE("touch log records the nodes a mutation visits") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId b = g.add_node(fx.lit(2), {});
    NodeId r = g.add_node(fx.f, {a, b});
    g.set_root(r);
    g.begin_touch_log();
    g.set_successor(r, 0, b);
    auto touched = g.end_touch_log();
    std::set<NodeId> t(touched.begin(), touched.end());
    CHECK(t.count(r) == 1);
    CHECK(t.count(a) == 1); // pred list shrank
    CHECK(t.count(b) == 1); // pred list grew
}

TEST_CASE("reaches follows successor edges only") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId m = g.add_node(fx.u, {a});
    NodeId r = g.add_node(fx.u, {m});
    g.set_root(r);
    CHECK(g.reaches(r, a));
    CHECK(!g.reaches(a, r));
    CHECK(g.reaches(a, a));
}

TEST_CASE("DOT output names every live node and edge") {
    Fixture fx;
    Graph g;
    NodeId a = g.add_node(fx.lit(1), {});
    NodeId r = g.add_node(fx.u, {a});
    g.set_root(r);
    g.set_dominator(a, r);
    std::string dot = to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("label=\"u\"") != std::string::npos);
    CHECK(dot.find("label=\"1\"") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos); // dominator edge
}
