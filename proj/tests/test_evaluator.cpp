#include <string>
#include <vector>

#include "doctest.h"

#include "bubbly/evaluator.hpp"
#include "bubbly/parser.hpp"

using namespace bubbly;

namespace {

Program parsed(const std::string& src) {
    Program p;
    auto diags = parse_program(src, p);
    for (const auto& d : diags)
        FAIL("unexpected diagnostic at ", d.loc.line, ":", d.loc.col, ": ", d.message);
    REQUIRE(p.check_lois().empty());
    return p;
}

ValueSet run(Program& p, const std::string& expr, EvalConfig cfg = {}) {
    cfg.validate_every_step = true;
    return compute_values(parse_expr(expr), p, cfg);
}

const char* kCoin = "coin = 0 ? 1\n"
                    "\n"
                    "double x = x + x\n";

} // namespace

TEST_CASE("a shared choice is decided once: double coin has two values, not three") {
    Program p = parsed(kCoin);
    for (Strategy s : {Strategy::Bubbling, Strategy::Copying}) {
        CAPTURE(static_cast<int>(s));
        EvalConfig cfg;
        cfg.strategy = s;
        ValueSet vs = run(p, "double coin", cfg);
        CHECK(vs.values == std::set<std::string>{"0", "2"});
        CHECK(vs.counts.at("0") == 1);
        CHECK(vs.counts.at("2") == 1);
        CHECK(vs.exhausted);
        CHECK(vs.stats.splits == 1);
        if (s == Strategy::Bubbling) {
            CHECK(vs.stats.bubbles == 1);
        } else {
            CHECK(vs.stats.bubbles == 0);
        }
    }
}

TEST_CASE("independent choices multiply: coin + coin") {
    Program p = parsed(kCoin);
    ValueSet vs = run(p, "coin + coin");
    CHECK(vs.values == std::set<std::string>{"0", "1", "2"});
    CHECK(vs.counts.at("0") == 1);
    CHECK(vs.counts.at("1") == 2);
    CHECK(vs.counts.at("2") == 1);
    CHECK(vs.stats.duplicate_values == 1);
    CHECK(vs.exhausted);
}

TEST_CASE("fair interleaving finds a value beside a diverging alternative") {
    Program p = parsed("loop = loop\n");
    for (Strategy s : {Strategy::Bubbling, Strategy::Copying}) {
        CAPTURE(static_cast<int>(s));
        EvalConfig cfg;
        cfg.strategy = s;
        cfg.max_steps = 200;
        ValueSet vs = run(p, "loop ? 42", cfg);
        CHECK(vs.values == std::set<std::string>{"42"});
        CHECK(!vs.exhausted); // the looping branch never finishes
        CHECK(vs.steps_used <= 200);
    }
}

TEST_CASE("normalize reports the terminal kind") {
    Program p = parsed("");
    SUBCASE("a pure arithmetic graph reaches a value") {
        Graph g = to_graph(parse_expr("1 + 2 * 3"), p);
        CHECK(normalize(g, p) == StepResult::Kind::Value);
        CHECK(print_value(g, g.root()) == "7");
    }
    SUBCASE("a root choice stops the walk") {
        Graph g = to_graph(parse_expr("1 ? 2"), p);
        std::size_t before = g.live_count();
        CHECK(normalize(g, p) == StepResult::Kind::Split);
        CHECK(g.live_count() == before);
    }
    SUBCASE("undefined arithmetic fails") {
        Graph g = to_graph(parse_expr("1 / 0"), p);
        CHECK(normalize(g, p) == StepResult::Kind::Fail);
    }
    SUBCASE("the step budget is enforced") {
        Program lp = parsed("loop = loop\n");
        Graph g = to_graph(parse_expr("loop"), lp);
        CHECK_THROWS_AS(normalize(g, lp, Strategy::Bubbling, 50), graph_error);
    }
}

TEST_CASE("failures drain the queue without producing values") {
    Program p = parsed("");
    ValueSet vs = run(p, "1 / 0");
    CHECK(vs.values.empty());
    CHECK(vs.exhausted);
    CHECK(vs.stats.failures == 1);
}

TEST_CASE("a failing branch does not poison the other alternative") {
    Program p = parsed("");
    ValueSet vs = run(p, "(1 / 0) ? 5");
    CHECK(vs.values == std::set<std::string>{"5"});
    CHECK(vs.exhausted);
    CHECK(vs.stats.failures == 1);
}

TEST_CASE("max_values stops enumeration early") {
    Program p = parsed("");
    EvalConfig cfg;
    cfg.max_values = 2;
    ValueSet vs = run(p, "0 ? (1 ? (2 ? 3))", cfg);
    CHECK(vs.values.size() == 2);
    CHECK(!vs.exhausted);
}

TEST_CASE("the step budget stops a diverging evaluation") {
    Program p = parsed("loop = loop\n");
    EvalConfig cfg;
    cfg.max_steps = 64;
    ValueSet vs = run(p, "loop", cfg);
    CHECK(vs.values.empty());
    CHECK(!vs.exhausted);
    CHECK(vs.steps_used == 64);
}

TEST_CASE("steps count reductions, not value detection") {
    Program p = parsed("");
    ValueSet vs = run(p, "1 + 2 * 3");
    CHECK(vs.values == std::set<std::string>{"7"});
    CHECK(vs.steps_used == 2);
    CHECK(vs.stats.builtin_rewrites == 2);
    CHECK(vs.stats.rewrites == 0);
    CHECK(vs.stats.splits == 0);
}

TEST_CASE("trace lines are tab separated and use the fixed step kinds") {
    Program p = parsed(kCoin);
    std::vector<std::string> lines;
    EvalConfig cfg;
    cfg.trace = [&](const std::string& s) { lines.push_back(s); };
    ValueSet vs = run(p, "double coin", cfg);
    CHECK(lines.size() == vs.steps_used);
    bool saw_bubble = false;
    for (const auto& line : lines) {
        CAPTURE(line);
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        REQUIRE(fields.size() == 6);
        bool kind_ok = fields[2] == "rewrite" || fields[2] == "bubble" ||
                       fields[2] == "split" || fields[2] == "fail";
        CHECK(kind_ok);
        CHECK(fields[5].rfind("rewrites=", 0) == 0);
        if (fields[2] == "bubble") {
            saw_bubble = true;
            CHECK(fields[3].find("->") != std::string::npos);
            CHECK(fields[4].rfind("path=", 0) == 0);
        }
    }
    CHECK(saw_bubble);
}

TEST_CASE("the snapshot hook fires once per step and twice per split") {
    Program p = parsed(kCoin);
    std::uint64_t calls = 0;
    EvalConfig cfg;
    cfg.snapshot = [&](const Graph&, std::uint64_t) { ++calls; };
    ValueSet vs = run(p, "double coin", cfg);
    CHECK(calls == vs.stats.rewrites + vs.stats.builtin_rewrites + vs.stats.bubbles +
                       2 * vs.stats.splits);
}

TEST_CASE("both strategies enumerate the same values") {
    Program p = parsed("coin = 0 ? 1\n"
                       "\n"
                       "double x = x + x\n"
                       "\n"
                       "pick x y = x ? y\n");
    const char* exprs[] = {
        "double (double coin)",
        "pick (coin + 10) (coin * 2)",
        "double coin + pick 1 2",
        "(coin ? 5) * 2",
    };
    for (const char* e : exprs) {
        CAPTURE(e);
        EvalConfig bub, cop;
        bub.strategy = Strategy::Bubbling;
        cop.strategy = Strategy::Copying;
        ValueSet vb = run(p, e, bub);
        ValueSet vc = run(p, e, cop);
        REQUIRE(vb.exhausted);
        REQUIRE(vc.exhausted);
        CHECK(vb.values == vc.values);
        CHECK(vb.counts == vc.counts);
    }
}

TEST_CASE("constructor values print with their arguments") {
    Program p = parsed("data List = Nil | Cons Int List\n"
                       "\n"
                       "rev Nil a = a\n"
                       "rev (Cons x xs) a = rev xs (Cons x a)\n");
    ValueSet vs = run(p, "rev (Cons 1 (Cons 2 Nil)) Nil");
    CHECK(vs.values == std::set<std::string>{"Cons 2 (Cons 1 Nil)"});
}

TEST_CASE("two workers produce the same value multiset as one") {
    Program p = parsed(kCoin);
    EvalConfig one, two;
    one.jobs = 1;
    two.jobs = 2;
    ValueSet a = run(p, "double coin + coin", one);
    ValueSet b = run(p, "double coin + coin", two);
    REQUIRE(a.exhausted);
    REQUIRE(b.exhausted);
    CHECK(a.values == b.values);
    CHECK(a.counts == b.counts);
}
