#pragma once

#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "bubbly/graph.hpp"
#include "bubbly/program.hpp"

namespace bubbly {

// Successful match of a rule's left-hand side at a node: variable bindings
// plus the redex pattern (the matched node and every node matched at a
// non-variable pattern position; sharing collapses, so set semantics).
struct Match {
    std::unordered_map<std::string, NodeId> bindings;
    std::vector<NodeId> pattern; // redex root first
};

struct NoMatch {};

// The pattern demanded a constructor at `at` but found an operation or a
// choice; `at` has to be evaluated (or the choice moved out) first.
struct Demand {
    NodeId at;
};

using MatchResult = std::variant<Match, NoMatch, Demand>;

// Matches the rule's left-hand side against the graph at n. The node's label
// must be the rule's operation. A constructor mismatch anywhere is a
// definitive NoMatch even when another position is demanded.
MatchResult match_rule(const Graph& g, NodeId n, const Rule& rule);

struct RewriteResult {
    NodeId contractum;          // node the redex answers to now
    std::vector<NodeId> fresh;  // nodes created for the right-hand side
    std::vector<NodeId> erased; // redex-pattern nodes the step removed
    bool collapsing = false;    // right-hand side was a bare variable
};

// Applies `rule` at `at` with a previously computed match: builds the
// contractum, redirects the redex's incoming edges to it, retires the nodes
// that became unreachable, and repairs the dominator attribute of everything
// affected. The graph stays structurally valid, fully reachable and
// dominator-sound.
RewriteResult rewrite_at(Graph& g, NodeId at, const Rule& rule, const Match& m);

// Rewrites a builtin integer operation node (both arguments already literal
// leaves) to the result leaf, with the same attribute maintenance.
RewriteResult builtin_step(Graph& g, NodeId at, const Symbol* result);

// Value of a builtin over two literal/boolean-producing arguments. nullopt
// when undefined on those values: division by zero, negative exponent,
// arithmetic overflow, or a non-literal argument.
std::optional<const Symbol*> eval_builtin(SymbolTable& syms, const Symbol* op, const Symbol* a,
                                          const Symbol* b);

} // namespace bubbly
