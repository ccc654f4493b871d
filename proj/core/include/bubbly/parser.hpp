#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bubbly/ast.hpp"
#include "bubbly/graph.hpp"
#include "bubbly/program.hpp"

namespace bubbly {

// Parses source text into `p`. Layout: a declaration starts in column 1,
// its continuation lines are indented, and `--` comments run to end of line.
// Data declarations are collected before rules, so declaration order is free.
// Returns every diagnostic found; the program must not be evaluated when the
// result is non-empty. Rule-system checks are separate (Program::check_lois).
std::vector<Diagnostic> parse_program(std::string_view src, Program& p);

// Parses one standalone expression, optionally with a where-clause.
// Throws parse_error; resolution against a program happens separately.
ExprWithWhere parse_expr(std::string_view src);

// Precedence-aware printers with minimal parentheses. print_program renders
// the user-declared part only (data declarations and rules), never the
// prelude, and is a fixed point of parse-then-print.
std::string print_expr(const ExprAst& e);
std::string print_pattern(const Pattern& p);
std::string print_term(const Term& t, const std::vector<std::string>& local_names);
std::string print_rule(const Rule& r);
std::string print_program(const Program& p);

// Renders the term under `n` as source text: nullary labels bare, non-nullary
// arguments parenthesized, choices infix. Sharing prints expanded.
std::string print_value(const Graph& g, NodeId n);

} // namespace bubbly
