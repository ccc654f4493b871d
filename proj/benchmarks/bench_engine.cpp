#include <chrono>

#include <benchmark/benchmark.h>

#include "bubbly/bubbling.hpp"
#include "bubbly/dominance.hpp"
#include "bubbly/evaluator.hpp"
#include "bubbly/parser.hpp"

using namespace bubbly;

namespace {

Program parse_all(const char* src) {
    Program p;
    auto diags = parse_program(src, p);
    if (!diags.empty() || !p.check_lois().empty())
        throw std::runtime_error("benchmark program does not parse");
    return p;
}

// A two-node bubble under k extra context layers; the time must not grow
// with k because the step never visits nodes above the destination.
void BM_BubbleUnderPadding(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    SymbolTable syms;
    const Symbol* wrap = syms.intern("W", SymbolKind::Constructor, 1);
    const Symbol* pin = syms.intern("H", SymbolKind::Operation, 2);
    for (auto _ : state) {
        Graph g;
        NodeId a = g.add_node(syms.literal(1), {});
        NodeId b = g.add_node(syms.literal(2), {});
        NodeId c = g.add_node(syms.choice(), {a, b});
        NodeId h = g.add_node(pin, {c, c});
        NodeId top = g.add_node(wrap, {h});
        for (int i = 0; i < k; ++i)
            top = g.add_node(wrap, {top});
        g.set_root(top);
        initialize_dominators(g);

        auto t0 = std::chrono::steady_clock::now();
        bubble(g, c);
        auto t1 = std::chrono::steady_clock::now();
        state.SetIterationTime(std::chrono::duration<double>(t1 - t0).count());
        benchmark::DoNotOptimize(g.live_count());
    }
}

const char* kPerm = "data List = Nil | Cons Int List\n"
                    "\n"
                    "insert x Nil = Cons x Nil\n"
                    "insert x (Cons y ys) = Cons x (Cons y ys) ? Cons y (insert x ys)\n"
                    "\n"
                    "perm Nil = Nil\n"
                    "perm (Cons x xs) = insert x (perm xs)\n";

void run_perm(benchmark::State& state, Strategy strategy) {
    Program p = parse_all(kPerm);
    ExprWithWhere ex = parse_expr("perm (Cons 1 (Cons 2 (Cons 3 Nil)))");
    EvalConfig cfg;
    cfg.strategy = strategy;
    cfg.max_values = 64;
    std::uint64_t steps = 0;
    for (auto _ : state) {
        ValueSet vs = compute_values(ex, p, cfg);
        steps += vs.steps_used;
        benchmark::DoNotOptimize(vs.values.size());
    }
    state.counters["steps/s"] =
        benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsRate);
}

void BM_PermBubbling(benchmark::State& state) { run_perm(state, Strategy::Bubbling); }
void BM_PermCopying(benchmark::State& state) { run_perm(state, Strategy::Copying); }

void BM_SharedChoice(benchmark::State& state) {
    Program p = parse_all("coin = 0 ? 1\n\ndouble x = x + x\n");
    ExprWithWhere ex = parse_expr("double (double (double coin))");
    EvalConfig cfg;
    for (auto _ : state) {
        ValueSet vs = compute_values(ex, p, cfg);
        benchmark::DoNotOptimize(vs.values.size());
    }
}

} // namespace

BENCHMARK(BM_BubbleUnderPadding)->Arg(0)->Arg(64)->Arg(1024)->UseManualTime();
BENCHMARK(BM_PermBubbling);
BENCHMARK(BM_PermCopying);
BENCHMARK(BM_SharedChoice);

BENCHMARK_MAIN();
