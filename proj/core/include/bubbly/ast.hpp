#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bubbly/symbols.hpp"

namespace bubbly {

struct SourceLoc {
    int line = 0;
    int col = 0;
};

class parse_error : public std::runtime_error {
public:
    parse_error(SourceLoc loc, const std::string& message)
        : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.col) + ": " +
                             message),
          loc_(loc), message_(message) {}
    SourceLoc loc() const { return loc_; }
    // what() carries the "line:col: " prefix; this is the bare text.
    const std::string& message() const { return message_; }

private:
    SourceLoc loc_;
    std::string message_;
};

// Unresolved expression tree straight out of the parser. Identifiers are not
// yet classified (variable, local, operation, constructor); operators parse
// as applications of their symbol name ("?", "+", "||", ...).
struct ExprAst {
    enum class Kind { Apply, IntLit };
    Kind kind = Kind::Apply;
    std::string name;        // Apply
    std::int64_t value = 0;  // IntLit
    std::vector<ExprAst> args;
    SourceLoc loc;

    static ExprAst apply(std::string name, std::vector<ExprAst> args, SourceLoc loc) {
        ExprAst e;
        e.kind = Kind::Apply;
        e.name = std::move(name);
        e.args = std::move(args);
        e.loc = loc;
        return e;
    }
    static ExprAst lit(std::int64_t v, SourceLoc loc) {
        ExprAst e;
        e.kind = Kind::IntLit;
        e.value = v;
        e.loc = loc;
        return e;
    }
};

struct WhereBinding {
    std::string name;
    ExprAst body;
    SourceLoc loc;
};

// An expression plus its where-clause. Each binding is instantiated at most
// once, so multiple uses of its name share one graph node.
struct ExprWithWhere {
    ExprAst body;
    std::vector<WhereBinding> locals;
};

// Left-hand-side pattern, resolved against the symbol table. Non-variable
// nodes normally carry constructors; an operation here parses fine and is
// reported by the LOIS check instead.
struct Pattern {
    bool is_var = false;
    std::string var;             // "_" for anonymous
    const Symbol* sym = nullptr; // when !is_var
    std::vector<Pattern> args;
    SourceLoc loc;

    static Pattern variable(std::string name, SourceLoc loc) {
        Pattern p;
        p.is_var = true;
        p.var = std::move(name);
        p.loc = loc;
        return p;
    }
    static Pattern node(const Symbol* sym, std::vector<Pattern> args, SourceLoc loc) {
        Pattern p;
        p.sym = sym;
        p.args = std::move(args);
        p.loc = loc;
        return p;
    }
};

// Resolved right-hand-side (or standalone expression) term.
struct Term {
    enum class Kind { Var, Local, Call };
    Kind kind = Kind::Call;
    std::string var;             // Var: a left-hand-side variable
    std::uint32_t local = 0;     // Local: index into the where-locals
    const Symbol* sym = nullptr; // Call
    std::vector<Term> args;
};

// A term with its where-locals, index-aligned with local_names. Local bodies
// are themselves terms and may reference earlier or later locals, but never
// cyclically (rejected at resolution).
struct BoundTerm {
    Term body;
    std::vector<Term> locals;
    std::vector<std::string> local_names;
};

struct Rule {
    const Symbol* op = nullptr;
    std::vector<Pattern> params;
    BoundTerm rhs;
    int line = 0;
};

struct Diagnostic {
    SourceLoc loc;
    std::string message;
};

} // namespace bubbly
