#include <set>

#include "doctest.h"

#include "bubbly/dominance.hpp"
#include "bubbly/parser.hpp"
#include "bubbly/program.hpp"

using namespace bubbly;

namespace {

Program parsed(const std::string& src) {
    Program p;
    auto diags = parse_program(src, p);
    for (const auto& d : diags)
        FAIL("unexpected diagnostic at ", d.loc.line, ":", d.loc.col, ": ", d.message);
    return p;
}

std::string first_lois(const std::string& src) {
    Program p = parsed(src);
    auto diags = p.check_lois();
    REQUIRE(!diags.empty());
    return diags.front().message;
}

} // namespace

TEST_CASE("the prelude defines boolean operations and choice documentation rules") {
    Program p;
    REQUIRE(parse_program("", p).empty());
    REQUIRE(p.check_lois().empty());
    CHECK(p.prepared());
    const Symbol* orop = p.symbols().find("||");
    const Symbol* notop = p.symbols().find("not");
    REQUIRE(orop != nullptr);
    REQUIRE(notop != nullptr);
    CHECK(p.rules_for(orop).size() == 2);
    CHECK(p.rules_for(notop).size() == 2);
    CHECK(p.rules_for(p.symbols().choice()).size() == 2);
    // prelude rules carry line 0 and are hidden from the printer
    CHECK(print_program(p).empty());
}

TEST_CASE("left-linearity is enforced, wildcards exempt") {
    CHECK(first_lois("f x x = 0\n").find("left-linear") != std::string::npos);
    Program ok = parsed("f _ _ = 0\n");
    CHECK(ok.check_lois().empty());
}

TEST_CASE("patterns must be built from constructors") {
    // The parser already refuses an applied operation inside a pattern.
    const char* src = "g x = x\n"
                      "\n"
                      "f (g x) = x\n";
    Program p;
    auto diags = parse_program(src, p);
    REQUIRE(!diags.empty());
    CHECK(diags.front().message.find("patterns are constructor terms") != std::string::npos);

    // A rule assembled directly can still smuggle one in; the rule-system
    // check reports it.
    Program q;
    SymbolTable& s = q.symbols();
    const Symbol* f = s.intern("f", SymbolKind::Operation, 1);
    const Symbol* g2 = s.intern("g", SymbolKind::Operation, 1);
    Rule r;
    r.op = f;
    r.params.push_back(
        Pattern::node(g2, {Pattern::variable("x", {})}, {}));
    Term rhs;
    rhs.kind = Term::Kind::Var;
    rhs.var = "x";
    r.rhs.body = std::move(rhs);
    q.add_rule(std::move(r));
    auto lois = q.check_lois();
    REQUIRE(!lois.empty());
    CHECK(lois.front().message.find("non-constructor") != std::string::npos);
}

TEST_CASE("inductive sequentiality: a discriminating position must exist") {
    const char* overlapping = "data Nat = Z | S Nat\n"
                              "\n"
                              "f Z _ = 0\n"
                              "f _ Z = 1\n";
    CHECK(first_lois(overlapping).find("inductively sequential") != std::string::npos);
}

TEST_CASE("definitional trees pick the leftmost all-demanded position") {
    const char* src = "data Nat = Z | S Nat\n"
                      "\n"
                      "f Z Z = 0\n"
                      "f Z (S y) = 1\n"
                      "f (S x) Z = 2\n"
                      "f (S x) (S y) = 3\n";
    Program p = parsed(src);
    REQUIRE(p.check_lois().empty());
    const DefTree* t = p.tree(p.symbols().find("f"));
    REQUIRE(t != nullptr);
    REQUIRE(t->kind == DefTree::Kind::Branch);
    CHECK(t->position == std::vector<std::uint32_t>{0});
    REQUIRE(t->children.size() == 2);
    for (const auto& [ctor, child] : t->children) {
        CHECK(ctor->is_constructor());
        CHECK(child->kind == DefTree::Kind::Branch);
        CHECK(child->position == std::vector<std::uint32_t>{1});
    }
}

TEST_CASE("definitional trees descend into nested patterns") {
    const char* src = "data Nat = Z | S Nat\n"
                      "\n"
                      "pred (S Z) = Z\n"
                      "pred (S (S x)) = S x\n";
    Program p = parsed(src);
    REQUIRE(p.check_lois().empty());
    const DefTree* t = p.tree(p.symbols().find("pred"));
    REQUIRE(t->kind == DefTree::Kind::Branch);
    CHECK(t->position == std::vector<std::uint32_t>{0});
    REQUIRE(t->children.size() == 1); // only S at the top
    const DefTree* inner = t->children[0].second.get();
    REQUIRE(inner->kind == DefTree::Kind::Branch);
    CHECK(inner->position == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("rules arriving after a lois failure are reported, not silently kept") {
    Program p = parsed("f x x = 0\n");
    CHECK(!p.check_lois().empty());
    CHECK(!p.prepared());
    CHECK(p.tree(p.symbols().find("f")) == nullptr);
}

TEST_CASE("to_graph builds a fully reachable graph with immediate dominators") {
    Program p = parsed("");
    Graph g = to_graph(parse_expr("(1 ? 2) + (1 ? 2)"), p);
    CHECK(check_structure(g).ok);
    CHECK(validate_attribute(g).ok);
    CHECK(g.live_count() == 7); // +, two distinct choices, 1, 2, 1, 2... literals interned per node
}

TEST_CASE("where-bound subterms are instantiated once and shared") {
    Program p = parsed("");
    Graph g = to_graph(parse_expr("x + x where x = 1 ? 2"), p);
    NodeId plus = g.root();
    CHECK(g.successor(plus, 0) == g.successor(plus, 1));
    CHECK(g.live_count() == 4);
}

TEST_CASE("unused where-bindings are dropped from the instantiated graph") {
    Program p = parsed("");
    Graph g = to_graph(parse_expr("1 + 2 where unused = 3 ? 4"), p);
    CHECK(g.live_count() == 3);
    CHECK(check_structure(g).ok); // full reachability holds
}

TEST_CASE("user rules cannot target protected operations") {
    Program bad;
    auto d = parse_program("data Foo = Foo\n\n|| x y = x\n", bad);
    CHECK(!d.empty());
}
