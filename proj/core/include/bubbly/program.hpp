#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bubbly/ast.hpp"
#include "bubbly/graph.hpp"
#include "bubbly/symbols.hpp"

namespace bubbly {

// Definitional tree of one operation. Branch nodes name the argument position
// (a path of successor indices below the operation node) whose constructor
// discriminates the remaining rules; leaves hold a single rule. Matching
// descends branches, and a non-constructor at a branch position is exactly a
// demanded position.
struct DefTree {
    enum class Kind { Branch, Leaf };
    Kind kind = Kind::Leaf;

    // Branch
    std::vector<std::uint32_t> position;
    std::vector<std::pair<const Symbol*, std::unique_ptr<DefTree>>> children;

    // Leaf
    const Rule* rule = nullptr;
};

// Rules plus symbols. The table predeclares the choice symbol `?`, True and
// False, and the integer primitives; the constructor includes a small prelude
// (`||`, `&&`, `not`) and the two documentation rules for `?` itself
// (`x ? _ = x`, `_ ? y = y`), which the reference strategy resolves at choice
// leaves and the normal strategy never consults.
class Program {
public:
    Program();
    Program(Program&&) = default;
    Program& operator=(Program&&) = default;
    Program(const Program&) = delete;
    Program& operator=(const Program&) = delete;

    SymbolTable& symbols() { return symbols_; }
    const SymbolTable& symbols() const { return symbols_; }

    void add_rule(Rule r);
    void add_data_decl(std::string type_name, std::vector<const Symbol*> ctors);

    const std::deque<Rule>& rules() const { return rules_; }
    std::vector<const Rule*> rules_for(const Symbol* op) const;
    const std::vector<std::pair<std::string, std::vector<const Symbol*>>>& data_decls() const {
        return data_decls_;
    }

    // LOIS checks: left-linearity, constructor-based patterns, inductive
    // sequentiality (via definitional-tree construction). Returns all
    // findings; on a clean result the definitional trees are cached and the
    // program is ready to evaluate.
    std::vector<Diagnostic> check_lois();

    // nullptr until check_lois has accepted the operation's rules.
    const DefTree* tree(const Symbol* op) const;
    bool prepared() const { return prepared_; }

private:
    SymbolTable symbols_;
    std::deque<Rule> rules_;
    std::vector<std::pair<std::string, std::vector<const Symbol*>>> data_decls_;
    std::map<const Symbol*, std::unique_ptr<DefTree>> trees_;
    bool prepared_ = false;

    void add_prelude();
};

// --- graph construction -----------------------------------------------------

// Resolves names in an expression against a program: identifiers become
// left-hand-side variables (when listed in lhs_vars), where-locals, or
// symbols, with full first-order application enforced. Throws parse_error on
// unknown names, arity mismatches, applied variables, `_` outside patterns,
// duplicate or recursive where-bindings.
BoundTerm resolve_expr(const ExprWithWhere& ast, Program& p,
                       const std::vector<std::string>& lhs_vars);

struct Instantiation {
    NodeId root;
    std::vector<NodeId> fresh; // creation order; empty for a bare-variable term
};

// Builds the graph nodes of a resolved term: one fresh node per call position,
// one shared node per where-local, variables resolved through `bindings`.
// Dominator attributes are left unset.
Instantiation instantiate(Graph& g, const BoundTerm& t,
                          const std::unordered_map<std::string, NodeId>& bindings);

// Expression -> rooted graph with the dominator attribute initialized to
// immediate dominators. The result is structurally valid and fully reachable.
Graph to_graph(const ExprWithWhere& ast, Program& p);

} // namespace bubbly
