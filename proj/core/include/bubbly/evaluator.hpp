#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "bubbly/bubbling.hpp"
#include "bubbly/graph.hpp"
#include "bubbly/program.hpp"

namespace bubbly {

enum class Strategy { Bubbling, Copying };

// Raised when validate-every-step finds a structural or dominator defect.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EngineStats {
    std::uint64_t rewrites = 0;         // user-rule rewrites, collapsing included
    std::uint64_t builtin_rewrites = 0; // integer primitive reductions
    std::uint64_t bubbles = 0;
    std::uint64_t splits = 0;           // root splits plus copying splits
    std::uint64_t failures = 0;
    std::uint64_t duplicate_values = 0;
    std::uint64_t clones_created = 0;   // bubbling: surviving fresh nodes;
                                        // splits: nodes built for the copies
    WriteCounters writes;               // summed over every computation's graph
};

struct EvalConfig {
    Strategy strategy = Strategy::Bubbling;
    std::size_t max_values = 16;
    std::uint64_t max_steps = 100000; // total across all computations
    bool validate_every_step = false; // throw validation_error on any unsound step
    unsigned jobs = 1;                // queue workers; 1 = strict round-robin
    std::function<void(const std::string&)> trace;           // one TSV line per step
    std::function<void(const Graph&, std::uint64_t)> snapshot; // after each step
};

// Values are canonical printed constructor terms; duplicates collapse into
// counts. exhausted is true iff the queue drained within the budgets.
struct ValueSet {
    std::set<std::string> values;
    std::map<std::string, std::size_t> counts;
    bool exhausted = false;
    std::uint64_t steps_used = 0;
    EngineStats stats;
};

// One queue entry: a graph owned exclusively plus its accumulators.
struct Computation {
    std::uint64_t id = 0;
    Graph graph;
    std::uint64_t steps = 0;
    std::uint64_t clones = 0;
};

struct StepResult {
    enum class Kind {
        Rewrite, // a user rule fired
        Builtin, // an integer primitive reduced
        Bubble,  // a demanded choice moved to its dominator
        Split,   // a choice resolved into two graphs (left/right)
        Value,   // the graph already is a constructor normal form (not a step)
        Fail,    // no rule applies / undefined arithmetic
    };
    Kind kind = Kind::Value;
    NodeId site;                      // redex / choice / offending node
    std::string detail;               // rule head, builtin, value text or reason
    std::optional<Graph> left, right; // Split only
    BubbleStats bubble;               // Bubble only
};

// Performs one strategy step on g: splits a root choice, otherwise walks the
// definitional trees from the outermost demanded node and rewrites, bubbles
// (strategy bubbling) or copy-splits (strategy copying) there. Split leaves g
// untouched and returns the two successor graphs.
StepResult step(Graph& g, Program& p, Strategy strategy);

// Steps g until it is a value or fails. A root choice ends the walk with
// Split (the alternatives are not pursued). Returns the terminal kind.
StepResult::Kind normalize(Graph& g, Program& p, Strategy strategy = Strategy::Bubbling,
                           std::uint64_t max_steps = 100000);

// Fair enumeration of values: round-robin over a queue of computations, one
// step per turn; splits enqueue both alternatives at the back.
ValueSet compute_values(Graph g, Program& p, const EvalConfig& cfg = {});
ValueSet compute_values(const ExprWithWhere& expr, Program& p, const EvalConfig& cfg = {});

} // namespace bubbly
