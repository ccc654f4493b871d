// Command-line driver: evaluate expressions against a rule file, check the
// rule system, inspect dominators, stream step traces, export DOT snapshots.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bubbly/dominance.hpp"
#include "bubbly/dot.hpp"
#include "bubbly/evaluator.hpp"
#include "bubbly/parser.hpp"

namespace {

struct Options {
    std::string program_path;
    std::string expr;
    std::string strategy = "bubbling";
    std::size_t max_values = 16;
    std::uint64_t max_steps = 100000;
    bool validate = false;
    std::string dot_dir;
    bool stats = false;
    bool trace = false;
    unsigned jobs = 1;
};

constexpr int kOk = 0;
constexpr int kFailure = 1; // diagnostics reported or evaluation failed
constexpr int kUsage = 2;   // bad invocation, unreadable file, parse error

void add_eval_flags(CLI::App* sub, Options& o) {
    sub->add_option("-s,--strategy", o.strategy, "Choice resolution strategy")
        ->check(CLI::IsMember({"bubbling", "copying"}))
        ->capture_default_str();
    sub->add_option("--max-values", o.max_values, "Stop after this many values")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-steps", o.max_steps, "Total step budget across all computations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--validate", o.validate,
                  "Re-check graph structure and the dominator attribute after every step");
    sub->add_option("--dot", o.dot_dir, "Write one numbered DOT snapshot per step to DIR");
    sub->add_flag("--stats", o.stats, "Print step, clone and attribute-write counters");
    sub->add_flag("--trace", o.trace, "Stream one line per step");
    sub->add_option("-j,--jobs", o.jobs, "Parallel queue workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

int load_program(const Options& o, bubbly::Program& p, bool print_ok) {
    std::string src;
    if (!o.program_path.empty()) {
        std::ifstream in(o.program_path);
        if (!in) {
            std::cerr << "error: cannot read '" << o.program_path << "'\n";
            return kUsage;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        src = buf.str();
    }
    auto diags = bubbly::parse_program(src, p);
    if (!diags.empty()) {
        for (const auto& d : diags)
            std::cerr << o.program_path << ":" << d.loc.line << ":" << d.loc.col << ": "
                      << d.message << "\n";
        return kUsage;
    }
    auto lois = p.check_lois();
    if (!lois.empty()) {
        for (const auto& d : lois)
            std::cout << o.program_path << ":" << d.loc.line << ":" << d.loc.col << ": "
                      << d.message << "\n";
        return kFailure;
    }
    if (print_ok)
        std::cout << "ok: " << p.rules().size() << " rules, " << p.data_decls().size()
                  << " data declarations\n";
    return kOk;
}

int build_graph(const Options& o, bubbly::Program& p, std::optional<bubbly::Graph>& out) {
    try {
        out.emplace(bubbly::to_graph(bubbly::parse_expr(o.expr), p));
    } catch (const bubbly::parse_error& e) {
        std::cerr << "expression: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

int run_dominators(const Options& o) {
    bubbly::Program p;
    if (int rc = load_program(o, p, false); rc != kOk)
        return rc;
    std::optional<bubbly::Graph> g;
    if (int rc = build_graph(o, p, g); rc != kOk)
        return rc;

    auto idoms = bubbly::immediate_dominators(*g);
    auto show = [](std::optional<bubbly::NodeId> d) {
        return d ? "n" + std::to_string(d->value()) : std::string("-");
    };
    std::cout << "node\tlabel\tstored\timmediate\n";
    for (bubbly::NodeId n : g->live_nodes()) {
        std::optional<bubbly::NodeId> idom;
        if (n.value() < idoms.size())
            idom = idoms[n.value()];
        std::cout << "n" << n.value() << '\t' << g->label(n)->name() << '\t'
                  << show(g->dominator(n)) << '\t' << show(idom) << "\n";
    }
    return kOk;
}

int run_eval(const Options& o) {
    bubbly::Program p;
    if (int rc = load_program(o, p, false); rc != kOk)
        return rc;
    std::optional<bubbly::Graph> g;
    if (int rc = build_graph(o, p, g); rc != kOk)
        return rc;

    bubbly::EvalConfig cfg;
    cfg.strategy = o.strategy == "copying" ? bubbly::Strategy::Copying
                                           : bubbly::Strategy::Bubbling;
    cfg.max_values = o.max_values;
    cfg.max_steps = o.max_steps;
    cfg.validate_every_step = o.validate;
    cfg.jobs = o.jobs;
    if (o.trace)
        cfg.trace = [](const std::string& line) { std::cout << line << "\n"; };

    std::map<std::uint64_t, int> per_step;
    if (!o.dot_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(o.dot_dir, ec);
        if (ec) {
            std::cerr << "error: cannot create '" << o.dot_dir << "': " << ec.message() << "\n";
            return kUsage;
        }
        auto dump = [&per_step, dir = o.dot_dir](const bubbly::Graph& snap, std::uint64_t step) {
            int seq = per_step[step]++;
            char name[64];
            std::snprintf(name, sizeof name, "step-%06llu%s.dot",
                          static_cast<unsigned long long>(step), seq == 0 ? "" : "-alt");
            std::ofstream out(std::filesystem::path(dir) / name);
            out << bubbly::to_dot(snap);
        };
        dump(*g, 0);
        cfg.snapshot = dump;
    }

    bubbly::ValueSet vs;
    try {
        vs = bubbly::compute_values(std::move(*g), p, cfg);
    } catch (const bubbly::validation_error& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kFailure;
    } catch (const bubbly::graph_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }

    for (const std::string& v : vs.values)
        std::cout << v << "\n";
    std::cout << "(" << vs.values.size() << (vs.values.size() == 1 ? " value, " : " values, ")
              << vs.steps_used << (vs.steps_used == 1 ? " step, " : " steps, ")
              << vs.stats.clones_created << (vs.stats.clones_created == 1 ? " clone, " : " clones, ")
              << (vs.exhausted ? "exhausted" : "not exhausted") << ")\n";
    if (o.stats) {
        const auto& s = vs.stats;
        std::cout << "rewrites:          " << s.rewrites << " user + " << s.builtin_rewrites
                  << " builtin\n"
                  << "bubbles:           " << s.bubbles << "\n"
                  << "splits:            " << s.splits << "\n"
                  << "failures:          " << s.failures << "\n"
                  << "duplicate values:  " << s.duplicate_values << "\n"
                  << "clones created:    " << s.clones_created << "\n"
                  << "attribute writes:  dominator=" << s.writes.dominator_writes
                  << " label=" << s.writes.label_writes
                  << " successor=" << s.writes.successor_writes
                  << " pred=" << s.writes.pred_writes << "\n";
    }
    if (vs.values.empty() && vs.exhausted)
        return kFailure; // every computation failed
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Term-graph rewriting engine with dominator-guided non-determinism"};
    app.require_subcommand(1);
    Options o;

    CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression to values");
    eval->add_option("program", o.program_path, "Rule file (omit to use only the prelude)");
    eval->add_option("-e,--expr", o.expr, "Expression to evaluate")->required();
    add_eval_flags(eval, o);

    CLI::App* check = app.add_subcommand("check", "Check a rule file and report diagnostics");
    check->add_option("program", o.program_path, "Rule file")->required();

    CLI::App* dom = app.add_subcommand("dominators",
                                       "Print stored vs immediate dominators of an expression");
    dom->add_option("program", o.program_path, "Rule file (omit to use only the prelude)");
    dom->add_option("-e,--expr", o.expr, "Expression to build")->required();

    CLI::App* trace = app.add_subcommand("trace", "Evaluate and stream one line per step");
    trace->add_option("program", o.program_path, "Rule file (omit to use only the prelude)");
    trace->add_option("-e,--expr", o.expr, "Expression to evaluate")->required();
    add_eval_flags(trace, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (trace->parsed())
        o.trace = true;
    try {
        if (check->parsed()) {
            bubbly::Program p;
            return load_program(o, p, true);
        }
        if (dom->parsed())
            return run_dominators(o);
        return run_eval(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
