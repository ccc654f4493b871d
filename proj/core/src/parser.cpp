#include "bubbly/parser.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bubbly {

namespace {

// --- tokens -------------------------------------------------------------

enum class Tok {
    Ident,
    Int,
    Op,
    LParen,
    RParen,
    Equals,
    Pipe,
    Semi,
    KwData,
    KwWhere,
    KwFree,
    Underscore,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::int64_t value = 0;
    SourceLoc loc;
};

struct OpInfo {
    int prec;
    enum Assoc { Left, Right, None } assoc;
};

const std::map<std::string, OpInfo, std::less<>>& op_table() {
    static const std::map<std::string, OpInfo, std::less<>> t = {
        {"?", {1, OpInfo::Right}},  {"||", {2, OpInfo::Right}}, {"&&", {2, OpInfo::Right}},
        {">", {3, OpInfo::None}},   {"<", {3, OpInfo::None}},   {"==", {3, OpInfo::None}},
        {"+", {4, OpInfo::Left}},   {"-", {4, OpInfo::Left}},   {"*", {5, OpInfo::Left}},
        {"/", {5, OpInfo::Left}},   {"^", {6, OpInfo::Right}},
    };
    return t;
}

std::string describe(const Token& t) {
    switch (t.kind) {
    case Tok::End: return "end of declaration";
    case Tok::Int: return "integer literal " + std::to_string(t.value);
    default: return "'" + t.text + "'";
    }
}

bool upper_start(const std::string& s) {
    return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

struct Line {
    int number = 0;
    std::string text;
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// One declaration's worth of lines -> tokens. Newlines are plain whitespace
// here; layout was already resolved by the chunker.
std::vector<Token> lex(const std::vector<Line>& lines) {
    std::vector<Token> out;
    auto operand_before = [&out]() {
        if (out.empty())
            return false;
        Tok k = out.back().kind;
        return k == Tok::Ident || k == Tok::Int || k == Tok::RParen || k == Tok::Underscore;
    };
    for (const Line& ln : lines) {
        const std::string& s = ln.text;
        std::size_t i = 0;
        while (i < s.size()) {
            char c = s[i];
            if (c == ' ' || c == '\t') {
                ++i;
                continue;
            }
            if (c == '-' && i + 1 < s.size() && s[i + 1] == '-')
                break; // comment to end of line
            SourceLoc loc{ln.number, static_cast<int>(i) + 1};
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < s.size() && ident_char(s[j]))
                    ++j;
                std::string word = s.substr(i, j - i);
                i = j;
                if (word == "_")
                    out.push_back({Tok::Underscore, word, 0, loc});
                else if (word[0] == '_')
                    throw parse_error(loc, "identifiers cannot start with '_'");
                else if (word == "data")
                    out.push_back({Tok::KwData, word, 0, loc});
                else if (word == "where")
                    out.push_back({Tok::KwWhere, word, 0, loc});
                else if (word == "free")
                    out.push_back({Tok::KwFree, word, 0, loc});
                else
                    out.push_back({Tok::Ident, word, 0, loc});
                continue;
            }
            bool neg = c == '-' && i + 1 < s.size() &&
                       std::isdigit(static_cast<unsigned char>(s[i + 1])) && !operand_before();
            if (std::isdigit(static_cast<unsigned char>(c)) || neg) {
                std::size_t j = neg ? i + 1 : i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                    ++j;
                std::string digits = s.substr(i, j - i);
                i = j;
                try {
                    out.push_back({Tok::Int, digits, std::stoll(digits), loc});
                } catch (const std::out_of_range&) {
                    throw parse_error(loc, "integer literal out of range");
                }
                continue;
            }
            ++i;
            switch (c) {
            case '(': out.push_back({Tok::LParen, "(", 0, loc}); break;
            case ')': out.push_back({Tok::RParen, ")", 0, loc}); break;
            case ';': out.push_back({Tok::Semi, ";", 0, loc}); break;
            case '=':
                if (i < s.size() && s[i] == '=') {
                    ++i;
                    out.push_back({Tok::Op, "==", 0, loc});
                } else {
                    out.push_back({Tok::Equals, "=", 0, loc});
                }
                break;
            case '|':
                if (i < s.size() && s[i] == '|') {
                    ++i;
                    out.push_back({Tok::Op, "||", 0, loc});
                } else {
                    out.push_back({Tok::Pipe, "|", 0, loc});
                }
                break;
            case '&':
                if (i < s.size() && s[i] == '&') {
                    ++i;
                    out.push_back({Tok::Op, "&&", 0, loc});
                    break;
                }
                throw parse_error(loc, "unexpected character '&'");
            case '?':
            case '+':
            case '-':
            case '*':
            case '/':
            case '^':
            case '>':
            case '<': out.push_back({Tok::Op, std::string(1, c), 0, loc}); break;
            default:
                throw parse_error(loc, std::string("unexpected character '") + c + "'");
            }
        }
    }
    SourceLoc end_loc{0, 0};
    if (!lines.empty())
        end_loc = {lines.back().number, static_cast<int>(lines.back().text.size()) + 1};
    out.push_back({Tok::End, "", 0, end_loc});
    return out;
}

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& peek2() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
    Token next() {
        Token t = toks_[pos_];
        if (pos_ + 1 < toks_.size())
            ++pos_;
        return t;
    }
    bool at(Tok k) const { return peek().kind == k; }
    Token expect(Tok k, const std::string& what) {
        if (!at(k))
            throw parse_error(peek().loc, "expected " + what + ", found " + describe(peek()));
        return next();
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

bool starts_atom(const Token& t) {
    return t.kind == Tok::Ident || t.kind == Tok::Int || t.kind == Tok::LParen ||
           t.kind == Tok::Underscore;
}

// --- expressions ----------------------------------------------------------

ExprAst parse_expr_bp(TokenStream& ts, int min_prec);

ExprAst parse_expr_atom(TokenStream& ts) {
    Token t = ts.next();
    switch (t.kind) {
    case Tok::Int: return ExprAst::lit(t.value, t.loc);
    case Tok::Ident: return ExprAst::apply(t.text, {}, t.loc);
    case Tok::Underscore: return ExprAst::apply("_", {}, t.loc);
    case Tok::LParen: {
        ExprAst e = parse_expr_bp(ts, 1);
        if (!ts.at(Tok::RParen))
            throw parse_error(ts.peek().loc, "expected ')', found " + describe(ts.peek()));
        ts.next();
        return e;
    }
    default: throw parse_error(t.loc, "expected an expression, found " + describe(t));
    }
}

ExprAst parse_application(TokenStream& ts) {
    ExprAst head = parse_expr_atom(ts);
    if (!starts_atom(ts.peek()))
        return head;
    if (head.kind != ExprAst::Kind::Apply || !head.args.empty())
        throw parse_error(ts.peek().loc, "only a named symbol can be applied to arguments");
    std::vector<ExprAst> args;
    while (starts_atom(ts.peek()))
        args.push_back(parse_expr_atom(ts));
    return ExprAst::apply(head.name, std::move(args), head.loc);
}

ExprAst parse_expr_bp(TokenStream& ts, int min_prec) {
    ExprAst lhs = parse_application(ts);
    while (ts.at(Tok::Op)) {
        OpInfo info = op_table().find(ts.peek().text)->second;
        if (info.prec < min_prec)
            break;
        Token op = ts.next();
        int next_min = info.assoc == OpInfo::Right ? info.prec : info.prec + 1;
        ExprAst rhs = parse_expr_bp(ts, next_min);
        std::vector<ExprAst> kids;
        kids.push_back(std::move(lhs));
        kids.push_back(std::move(rhs));
        lhs = ExprAst::apply(op.text, std::move(kids), op.loc);
        if (info.assoc == OpInfo::None && ts.at(Tok::Op) &&
            op_table().find(ts.peek().text)->second.prec == info.prec)
            throw parse_error(ts.peek().loc,
                              "comparison operators do not associate; add parentheses");
    }
    return lhs;
}

ExprWithWhere parse_expr_where(TokenStream& ts) {
    ExprWithWhere out;
    out.body = parse_expr_bp(ts, 1);
    if (ts.at(Tok::KwWhere)) {
        ts.next();
        bool any = false;
        for (;;) {
            if (ts.at(Tok::Semi)) {
                ts.next();
                continue;
            }
            if (ts.at(Tok::End))
                break;
            Token name = ts.expect(Tok::Ident, "a binding name after 'where'");
            if (upper_start(name.text))
                throw parse_error(name.loc, "where-binding names must be lowercase");
            if (ts.at(Tok::KwFree))
                throw parse_error(ts.peek().loc,
                                  "free variables are not supported by this engine; "
                                  "where-bindings must have the form 'name = expression'");
            ts.expect(Tok::Equals, "'=' in where-binding");
            WhereBinding b;
            b.name = name.text;
            b.loc = name.loc;
            b.body = parse_expr_bp(ts, 1);
            out.locals.push_back(std::move(b));
            any = true;
            if (ts.at(Tok::Semi)) {
                ts.next();
                continue;
            }
            break;
        }
        if (!any)
            throw parse_error(ts.peek().loc, "empty where-clause");
        if (ts.at(Tok::KwWhere))
            throw parse_error(ts.peek().loc, "a declaration has at most one where-clause");
    }
    return out;
}

// --- patterns ---------------------------------------------------------------

Pattern parse_pattern_atom(TokenStream& ts, Program& p);

Pattern finish_pattern_node(const Token& head, std::vector<Pattern> args, Program& p) {
    const Symbol* sym = p.symbols().find(head.text);
    if (sym == nullptr) {
        if (upper_start(head.text))
            throw parse_error(head.loc, "unknown constructor '" + head.text + "'");
        throw parse_error(head.loc, "'" + head.text +
                                        "' cannot be applied in a pattern; patterns are "
                                        "constructor terms");
    }
    if (static_cast<int>(args.size()) != sym->arity())
        throw parse_error(head.loc, "'" + head.text + "' takes " +
                                        std::to_string(sym->arity()) + " arguments, got " +
                                        std::to_string(args.size()));
    return Pattern::node(sym, std::move(args), head.loc);
}

// Inside parentheses: a constructor application or a single atom.
Pattern parse_pattern_apply(TokenStream& ts, Program& p) {
    if (ts.at(Tok::Ident) && starts_atom(ts.peek2())) {
        Token head = ts.next();
        std::vector<Pattern> args;
        while (starts_atom(ts.peek()))
            args.push_back(parse_pattern_atom(ts, p));
        return finish_pattern_node(head, std::move(args), p);
    }
    return parse_pattern_atom(ts, p);
}

Pattern parse_pattern_atom(TokenStream& ts, Program& p) {
    Token t = ts.next();
    switch (t.kind) {
    case Tok::Int: return Pattern::node(p.symbols().literal(t.value), {}, t.loc);
    case Tok::Underscore: return Pattern::variable("_", t.loc);
    case Tok::Ident:
        if (!upper_start(t.text))
            return Pattern::variable(t.text, t.loc);
        return finish_pattern_node(t, {}, p);
    case Tok::LParen: {
        Pattern inner = parse_pattern_apply(ts, p);
        if (!ts.at(Tok::RParen))
            throw parse_error(ts.peek().loc, "expected ')', found " + describe(ts.peek()));
        ts.next();
        return inner;
    }
    default: throw parse_error(t.loc, "expected a pattern, found " + describe(t));
    }
}

// --- declarations -------------------------------------------------------

void skip_type_atom(TokenStream& ts) {
    Token t = ts.next();
    if (t.kind == Tok::Ident)
        return;
    if (t.kind == Tok::LParen) {
        int depth = 1;
        while (depth > 0) {
            Token u = ts.next();
            if (u.kind == Tok::End)
                throw parse_error(u.loc, "unbalanced '(' in data declaration");
            if (u.kind == Tok::LParen)
                ++depth;
            else if (u.kind == Tok::RParen)
                --depth;
        }
        return;
    }
    throw parse_error(t.loc, "unexpected " + describe(t) + " in data declaration");
}

void parse_data_decl(TokenStream& ts, Program& p) {
    ts.expect(Tok::KwData, "'data'");
    Token name = ts.expect(Tok::Ident, "a type name after 'data'");
    if (!upper_start(name.text))
        throw parse_error(name.loc, "type names start with an uppercase letter");
    ts.expect(Tok::Equals, "'=' in data declaration");
    std::vector<const Symbol*> ctors;
    for (;;) {
        Token c = ts.expect(Tok::Ident, "a constructor name");
        if (!upper_start(c.text))
            throw parse_error(c.loc, "constructor names start with an uppercase letter");
        int arity = 0;
        while (!ts.at(Tok::Pipe) && !ts.at(Tok::End)) {
            skip_type_atom(ts);
            ++arity;
        }
        const Symbol* sym = nullptr;
        try {
            sym = p.symbols().intern(c.text, SymbolKind::Constructor, arity);
        } catch (const std::invalid_argument& e) {
            throw parse_error(c.loc, e.what());
        }
        ctors.push_back(sym);
        if (ts.at(Tok::Pipe)) {
            ts.next();
            continue;
        }
        break;
    }
    p.add_data_decl(name.text, std::move(ctors));
}

struct PendingRule {
    std::string head;
    SourceLoc head_loc;
    std::vector<Pattern> params;
    ExprWithWhere rhs;
    int line = 0;
};

PendingRule parse_rule(TokenStream& ts, Program& p) {
    Token head = ts.expect(Tok::Ident, "an operation name");
    if (upper_start(head.text))
        throw parse_error(head.loc,
                          "rule heads are operations and start with a lowercase letter");
    PendingRule r;
    r.head = head.text;
    r.head_loc = head.loc;
    r.line = head.loc.line;
    while (!ts.at(Tok::Equals)) {
        if (ts.at(Tok::End))
            throw parse_error(ts.peek().loc, "expected '=' in rule");
        r.params.push_back(parse_pattern_atom(ts, p));
    }
    ts.next();
    r.rhs = parse_expr_where(ts);
    if (!ts.at(Tok::End))
        throw parse_error(ts.peek().loc,
                          "unexpected " + describe(ts.peek()) + " after rule body");
    return r;
}

// Layout pass: comments stripped, blank lines close the current declaration,
// column-1 lines open a new one, indented lines continue it.
std::vector<std::vector<Line>> chunk_lines(std::string_view src, std::vector<Diagnostic>& diags) {
    std::vector<std::vector<Line>> chunks;
    bool open = false;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= src.size()) {
        std::size_t nl = src.find('\n', pos);
        std::string line(src.substr(pos, nl == std::string_view::npos ? src.size() - pos
                                                                      : nl - pos));
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::size_t cpos = line.find("--");
        if (cpos != std::string::npos)
            line.erase(cpos);
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank) {
            open = false;
        } else if (line[0] == ' ' || line[0] == '\t') {
            if (!open)
                diags.push_back(
                    {{lineno, 1}, "unexpected indentation; declarations start in column 1"});
            else
                chunks.back().push_back({lineno, std::move(line)});
        } else {
            chunks.emplace_back();
            chunks.back().push_back({lineno, std::move(line)});
            open = true;
        }
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    return chunks;
}

void collect_vars(const Pattern& p, std::vector<std::string>& out) {
    if (p.is_var) {
        if (p.var != "_")
            out.push_back(p.var);
        return;
    }
    for (const Pattern& a : p.args)
        collect_vars(a, out);
}

} // namespace

std::vector<Diagnostic> parse_program(std::string_view src, Program& p) {
    std::vector<Diagnostic> diags;
    auto chunks = chunk_lines(src, diags);

    std::vector<std::vector<Token>> rule_chunks;
    for (auto& chunk : chunks) {
        std::vector<Token> toks;
        try {
            toks = lex(chunk);
        } catch (const parse_error& e) {
            diags.push_back({e.loc(), e.message()});
            continue;
        }
        if (toks.front().kind == Tok::End)
            continue;
        if (toks.front().kind == Tok::KwData) {
            TokenStream ts(std::move(toks));
            try {
                parse_data_decl(ts, p);
                ts.expect(Tok::End, "end of declaration");
            } catch (const parse_error& e) {
                diags.push_back({e.loc(), e.message()});
            }
        } else {
            rule_chunks.push_back(std::move(toks));
        }
    }

    std::vector<PendingRule> pending;
    for (auto& toks : rule_chunks) {
        TokenStream ts(std::move(toks));
        try {
            pending.push_back(parse_rule(ts, p));
        } catch (const parse_error& e) {
            diags.push_back({e.loc(), e.message()});
        }
    }

    for (const PendingRule& r : pending) {
        try {
            p.symbols().intern(r.head, SymbolKind::Operation,
                               static_cast<int>(r.params.size()));
        } catch (const std::invalid_argument& e) {
            diags.push_back({r.head_loc, e.what()});
        }
    }

    for (PendingRule& r : pending) {
        const Symbol* op = p.symbols().find(r.head);
        if (op == nullptr || !op->is_operation() ||
            op->arity() != static_cast<int>(r.params.size()))
            continue; // interning failed above; already reported
        std::vector<std::string> lhs_vars;
        for (const Pattern& pat : r.params)
            collect_vars(pat, lhs_vars);
        Rule rule;
        rule.op = op;
        rule.params = std::move(r.params);
        rule.line = r.line;
        try {
            rule.rhs = resolve_expr(r.rhs, p, lhs_vars);
            p.add_rule(std::move(rule));
        } catch (const parse_error& e) {
            diags.push_back({e.loc(), e.message()});
        }
    }
    return diags;
}

ExprWithWhere parse_expr(std::string_view src) {
    std::vector<Line> lines;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= src.size()) {
        std::size_t nl = src.find('\n', pos);
        std::string line(src.substr(pos, nl == std::string_view::npos ? src.size() - pos
                                                                      : nl - pos));
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back({lineno, std::move(line)});
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    TokenStream ts(lex(lines));
    if (ts.at(Tok::End))
        throw parse_error(ts.peek().loc, "empty expression");
    ExprWithWhere out = parse_expr_where(ts);
    if (!ts.at(Tok::End))
        throw parse_error(ts.peek().loc,
                          "unexpected " + describe(ts.peek()) + " after expression");
    return out;
}

// --- printers ---------------------------------------------------------------

namespace {

constexpr int kAppPrec = 7;
constexpr int kAtomPrec = 8;

void print_ast(const ExprAst& e, int min_prec, std::string& out);

void print_ast_args(const std::string& name, const std::vector<ExprAst>& args, int min_prec,
                    std::string& out) {
    auto it = op_table().find(name);
    if (it != op_table().end() && args.size() == 2) {
        const OpInfo& info = it->second;
        bool parens = info.prec < min_prec;
        if (parens)
            out += '(';
        int lmin = info.assoc == OpInfo::Left ? info.prec : info.prec + 1;
        int rmin = info.assoc == OpInfo::Right ? info.prec : info.prec + 1;
        print_ast(args[0], lmin, out);
        out += ' ';
        out += name;
        out += ' ';
        print_ast(args[1], rmin, out);
        if (parens)
            out += ')';
        return;
    }
    if (args.empty()) {
        out += name;
        return;
    }
    bool parens = kAppPrec < min_prec;
    if (parens)
        out += '(';
    out += name;
    for (const ExprAst& a : args) {
        out += ' ';
        print_ast(a, kAtomPrec, out);
    }
    if (parens)
        out += ')';
}

void print_ast(const ExprAst& e, int min_prec, std::string& out) {
    if (e.kind == ExprAst::Kind::IntLit) {
        if (e.value < 0 && min_prec > 0) {
            out += '(';
            out += std::to_string(e.value);
            out += ')';
        } else {
            out += std::to_string(e.value);
        }
        return;
    }
    print_ast_args(e.name, e.args, min_prec, out);
}

ExprAst term_to_ast(const Term& t, const std::vector<std::string>& local_names) {
    switch (t.kind) {
    case Term::Kind::Var: return ExprAst::apply(t.var, {}, {});
    case Term::Kind::Local: return ExprAst::apply(local_names[t.local], {}, {});
    case Term::Kind::Call: {
        if (t.sym->literal())
            return ExprAst::lit(*t.sym->literal(), {});
        std::vector<ExprAst> args;
        args.reserve(t.args.size());
        for (const Term& a : t.args)
            args.push_back(term_to_ast(a, local_names));
        return ExprAst::apply(t.sym->name(), std::move(args), {});
    }
    }
    return ExprAst::lit(0, {});
}

void print_pattern_prec(const Pattern& p, bool atom, std::string& out) {
    if (p.is_var) {
        out += p.var;
        return;
    }
    bool negative = p.sym->literal() && *p.sym->literal() < 0;
    bool parens = atom && (!p.args.empty() || negative);
    if (parens)
        out += '(';
    out += p.sym->name();
    for (const Pattern& a : p.args) {
        out += ' ';
        print_pattern_prec(a, true, out);
    }
    if (parens)
        out += ')';
}

} // namespace

std::string print_expr(const ExprAst& e) {
    std::string out;
    print_ast(e, 0, out);
    return out;
}

std::string print_pattern(const Pattern& p) {
    std::string out;
    print_pattern_prec(p, true, out);
    return out;
}

std::string print_term(const Term& t, const std::vector<std::string>& local_names) {
    std::string out;
    print_ast(term_to_ast(t, local_names), 0, out);
    return out;
}

std::string print_rule(const Rule& r) {
    std::string out = r.op->name();
    for (const Pattern& p : r.params) {
        out += ' ';
        print_pattern_prec(p, true, out);
    }
    out += " = ";
    print_ast(term_to_ast(r.rhs.body, r.rhs.local_names), 0, out);
    for (std::size_t i = 0; i < r.rhs.locals.size(); ++i) {
        out += i == 0 ? " where " : "; ";
        out += r.rhs.local_names[i];
        out += " = ";
        print_ast(term_to_ast(r.rhs.locals[i], r.rhs.local_names), 0, out);
    }
    return out;
}

std::string print_program(const Program& p) {
    std::string out;
    for (const auto& [name, ctors] : p.data_decls()) {
        out += "data ";
        out += name;
        out += " = ";
        bool first_ctor = true;
        for (const Symbol* c : ctors) {
            if (!first_ctor)
                out += " | ";
            first_ctor = false;
            out += c->name();
            for (int i = 0; i < c->arity(); ++i)
                out += " t" + std::to_string(i + 1);
        }
        out += '\n';
    }
    for (const Rule& r : p.rules()) {
        if (r.line == 0)
            continue; // prelude
        out += print_rule(r);
        out += '\n';
    }
    return out;
}

std::string print_value(const Graph& g, NodeId n) {
    struct Printer {
        const Graph& g;
        // atom: argument position, every application needs parens.
        // choice_left: left operand of ?, where a nested ? must keep its parens
        // because the operator associates to the right.
        void render(NodeId x, bool atom, bool choice_left, std::string& out) const {
            const Symbol* sym = g.label(x);
            const auto& succ = g.successors(x);
            if (sym->is_choice() && succ.size() == 2) {
                bool parens = atom || choice_left;
                if (parens)
                    out += '(';
                render(succ[0], false, true, out);
                out += " ? ";
                render(succ[1], false, false, out);
                if (parens)
                    out += ')';
                return;
            }
            bool negative = sym->literal() && *sym->literal() < 0;
            bool parens = atom && (!succ.empty() || negative);
            if (parens)
                out += '(';
            out += sym->name();
            for (NodeId a : succ) {
                out += ' ';
                render(a, true, false, out);
            }
            if (parens)
                out += ')';
        }
    };
    std::string out;
    Printer{g}.render(n, false, false, out);
    return out;
}

} // namespace bubbly
