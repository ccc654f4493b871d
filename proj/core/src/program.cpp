#include "bubbly/program.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "bubbly/dominance.hpp"

namespace bubbly {

namespace {

Term var_term(std::string name) {
    Term t;
    t.kind = Term::Kind::Var;
    t.var = std::move(name);
    return t;
}

Term call_term(const Symbol* sym, std::vector<Term> args = {}) {
    Term t;
    t.kind = Term::Kind::Call;
    t.sym = sym;
    t.args = std::move(args);
    return t;
}

BoundTerm plain_rhs(Term body) {
    BoundTerm b;
    b.body = std::move(body);
    return b;
}

} // namespace

Program::Program() { add_prelude(); }

void Program::add_prelude() {
    const Symbol* t = symbols_.true_sym();
    const Symbol* f = symbols_.false_sym();
    const Symbol* choice = symbols_.choice();
    const Symbol* orOp = symbols_.intern("||", SymbolKind::Operation, 2);
    const Symbol* andOp = symbols_.intern("&&", SymbolKind::Operation, 2);
    const Symbol* notOp = symbols_.intern("not", SymbolKind::Operation, 1);

    SourceLoc none{};
    auto ctor_pat = [&](const Symbol* s) { return Pattern::node(s, {}, none); };
    auto var_pat = [&](const char* v) { return Pattern::variable(v, none); };

    // x ? _ = x   /   _ ? y = y  (kept for documentation and for the
    // reference strategy; choice nodes are otherwise handled structurally)
    rules_.push_back(Rule{choice, {var_pat("x"), var_pat("_")}, plain_rhs(var_term("x")), 0});
    rules_.push_back(Rule{choice, {var_pat("_"), var_pat("y")}, plain_rhs(var_term("y")), 0});

    rules_.push_back(Rule{orOp, {ctor_pat(t), var_pat("_")}, plain_rhs(call_term(t)), 0});
    rules_.push_back(Rule{orOp, {ctor_pat(f), var_pat("x")}, plain_rhs(var_term("x")), 0});
    rules_.push_back(Rule{andOp, {ctor_pat(t), var_pat("x")}, plain_rhs(var_term("x")), 0});
    rules_.push_back(Rule{andOp, {ctor_pat(f), var_pat("_")}, plain_rhs(call_term(f)), 0});
    rules_.push_back(Rule{notOp, {ctor_pat(t)}, plain_rhs(call_term(f)), 0});
    rules_.push_back(Rule{notOp, {ctor_pat(f)}, plain_rhs(call_term(t)), 0});
}

void Program::add_rule(Rule r) {
    if (r.op == symbols_.choice())
        throw parse_error({r.line, 1}, "the choice operation '?' cannot be redefined");
    if (r.op->builtin())
        throw parse_error({r.line, 1}, "builtin operation '" + r.op->name() + "' cannot be redefined");
    if (r.line != 0)
        for (const Rule& prior : rules_)
            if (prior.op == r.op && prior.line == 0)
                throw parse_error({r.line, 1}, "prelude operation '" + r.op->name() +
                                                   "' cannot be redefined");
    prepared_ = false;
    rules_.push_back(std::move(r));
}

void Program::add_data_decl(std::string type_name, std::vector<const Symbol*> ctors) {
    data_decls_.emplace_back(std::move(type_name), std::move(ctors));
}

std::vector<const Rule*> Program::rules_for(const Symbol* op) const {
    std::vector<const Rule*> out;
    for (const Rule& r : rules_)
        if (r.op == op)
            out.push_back(&r);
    return out;
}

const DefTree* Program::tree(const Symbol* op) const {
    auto it = trees_.find(op);
    return it == trees_.end() ? nullptr : it->second.get();
}

namespace {

const Pattern* pattern_at(const Rule& r, const std::vector<std::uint32_t>& pos) {
    const Pattern* p = &r.params[pos[0]];
    for (std::size_t i = 1; i < pos.size(); ++i) {
        if (p->is_var)
            return nullptr; // below a variable: no structure demanded
        p = &p->args[pos[i]];
    }
    return p;
}

// Recursive definitional-tree construction. `open` holds the argument
// positions still unconstrained (template variables). A position qualifies
// for branching when every remaining rule demands a constructor there.
std::unique_ptr<DefTree> build_tree(const std::vector<const Rule*>& rules,
                                    std::vector<std::vector<std::uint32_t>> open,
                                    std::string* err) {
    assert(!rules.empty());
    if (rules.size() == 1) {
        auto leaf = std::make_unique<DefTree>();
        leaf->kind = DefTree::Kind::Leaf;
        leaf->rule = rules.front();
        return leaf;
    }

    std::sort(open.begin(), open.end());
    for (const auto& pos : open) {
        bool all_ctor = true;
        for (const Rule* r : rules) {
            const Pattern* p = pattern_at(*r, pos);
            if (p == nullptr || p->is_var) {
                all_ctor = false;
                break;
            }
        }
        if (!all_ctor)
            continue;

        auto branch = std::make_unique<DefTree>();
        branch->kind = DefTree::Kind::Branch;
        branch->position = pos;

        std::vector<const Symbol*> order;
        std::map<const Symbol*, std::vector<const Rule*>> groups;
        for (const Rule* r : rules) {
            const Symbol* c = pattern_at(*r, pos)->sym;
            if (!groups.count(c))
                order.push_back(c);
            groups[c].push_back(r);
        }
        for (const Symbol* c : order) {
            std::vector<std::vector<std::uint32_t>> child_open;
            for (const auto& other : open)
                if (other != pos)
                    child_open.push_back(other);
            for (int i = 0; i < c->arity(); ++i) {
                auto sub = pos;
                sub.push_back(static_cast<std::uint32_t>(i));
                child_open.push_back(std::move(sub));
            }
            auto child = build_tree(groups[c], std::move(child_open), err);
            if (!child)
                return nullptr;
            branch->children.emplace_back(c, std::move(child));
        }
        return branch;
    }

    *err = "no argument position discriminates the remaining rules";
    return nullptr;
}

void collect_pattern_vars(const Pattern& p, std::vector<std::pair<std::string, SourceLoc>>& out) {
    if (p.is_var) {
        if (p.var != "_")
            out.emplace_back(p.var, p.loc);
        return;
    }
    for (const Pattern& a : p.args)
        collect_pattern_vars(a, out);
}

void check_constructor_based(const Pattern& p, bool root, std::vector<Diagnostic>& diags) {
    if (p.is_var)
        return;
    if (!root && !p.sym->is_constructor())
        diags.push_back({p.loc, "pattern position is labeled by non-constructor '" +
                                    p.sym->name() + "'; patterns below the rule head must be "
                                    "constructors or variables"});
    for (const Pattern& a : p.args)
        check_constructor_based(a, false, diags);
}

} // namespace

std::vector<Diagnostic> Program::check_lois() {
    std::vector<Diagnostic> diags;
    trees_.clear();
    prepared_ = false;

    std::vector<const Symbol*> op_order;
    std::map<const Symbol*, std::vector<const Rule*>> by_op;
    for (const Rule& r : rules_) {
        if (!by_op.count(r.op))
            op_order.push_back(r.op);
        by_op[r.op].push_back(&r);
    }

    for (const Rule& r : rules_) {
        if (r.op->is_choice())
            continue;
        // left-linearity
        std::vector<std::pair<std::string, SourceLoc>> vars;
        for (const Pattern& p : r.params)
            collect_pattern_vars(p, vars);
        std::set<std::string> seen;
        for (const auto& [name, loc] : vars)
            if (!seen.insert(name).second)
                diags.push_back({loc, "rule for '" + r.op->name() + "' is not left-linear: variable '" +
                                          name + "' occurs more than once in the left-hand side"});
        // constructor-based
        for (const Pattern& p : r.params)
            check_constructor_based(p, false, diags);
    }

    for (const Symbol* op : op_order) {
        if (op->is_choice())
            continue; // the overlapping choice rules are exempt by design
        std::vector<std::vector<std::uint32_t>> open;
        for (int i = 0; i < op->arity(); ++i)
            open.push_back({static_cast<std::uint32_t>(i)});
        std::string err;
        auto tree = build_tree(by_op[op], std::move(open), &err);
        if (!tree) {
            int line = by_op[op].front()->line;
            diags.push_back({{line, 1}, "rules for '" + op->name() +
                                            "' are not inductively sequential: " + err});
            continue;
        }
        trees_[op] = std::move(tree);
    }

    if (diags.empty())
        prepared_ = true;
    else
        trees_.clear();
    return diags;
}

// --- resolution and instantiation -------------------------------------------

namespace {

class Resolver {
public:
    Resolver(Program& p, const std::vector<std::string>& lhs_vars,
             const std::vector<WhereBinding>& locals)
        : program_(p), lhs_vars_(lhs_vars) {
        for (std::uint32_t i = 0; i < locals.size(); ++i) {
            const auto& b = locals[i];
            if (b.name == "_")
                throw parse_error(b.loc, "'_' cannot name a where-binding");
            if (is_lhs_var(b.name))
                throw parse_error(b.loc, "where-binding '" + b.name +
                                             "' shadows a left-hand-side variable");
            if (local_index_.count(b.name))
                throw parse_error(b.loc, "duplicate where-binding '" + b.name + "'");
            local_index_[b.name] = i;
        }
    }

    Term resolve(const ExprAst& e) {
        if (e.kind == ExprAst::Kind::IntLit) {
            Term t;
            t.kind = Term::Kind::Call;
            t.sym = program_.symbols().literal(e.value);
            return t;
        }
        if (e.name == "_")
            throw parse_error(e.loc, "'_' is only meaningful in patterns");
        if (e.args.empty()) {
            if (is_lhs_var(e.name))
                return var_term(e.name);
            auto it = local_index_.find(e.name);
            if (it != local_index_.end()) {
                Term t;
                t.kind = Term::Kind::Local;
                t.local = it->second;
                local_uses_.insert(it->second);
                return t;
            }
        } else if (is_lhs_var(e.name) || local_index_.count(e.name)) {
            throw parse_error(e.loc, "'" + e.name +
                                         "' is a variable and cannot be applied to arguments "
                                         "(applications are first-order)");
        }
        const Symbol* sym = program_.symbols().find(e.name);
        if (sym == nullptr)
            throw parse_error(e.loc, "unknown symbol '" + e.name + "'");
        if (static_cast<int>(e.args.size()) != sym->arity())
            throw parse_error(e.loc, "'" + e.name + "' takes " + std::to_string(sym->arity()) +
                                         " arguments, got " + std::to_string(e.args.size()) +
                                         " (applications must be saturated)");
        Term t;
        t.kind = Term::Kind::Call;
        t.sym = sym;
        t.args.reserve(e.args.size());
        for (const ExprAst& a : e.args)
            t.args.push_back(resolve(a));
        return t;
    }

    const std::set<std::uint32_t>& local_uses() const { return local_uses_; }

private:
    bool is_lhs_var(const std::string& name) const {
        return std::find(lhs_vars_.begin(), lhs_vars_.end(), name) != lhs_vars_.end();
    }

    Program& program_;
    const std::vector<std::string>& lhs_vars_;
    std::unordered_map<std::string, std::uint32_t> local_index_;
    std::set<std::uint32_t> local_uses_;
};

void collect_local_refs(const Term& t, std::set<std::uint32_t>& out) {
    if (t.kind == Term::Kind::Local)
        out.insert(t.local);
    for (const Term& a : t.args)
        collect_local_refs(a, out);
}

} // namespace

BoundTerm resolve_expr(const ExprWithWhere& ast, Program& p,
                       const std::vector<std::string>& lhs_vars) {
    Resolver resolver(p, lhs_vars, ast.locals);
    BoundTerm out;
    out.body = resolver.resolve(ast.body);
    out.locals.reserve(ast.locals.size());
    out.local_names.reserve(ast.locals.size());
    for (const WhereBinding& b : ast.locals) {
        out.locals.push_back(resolver.resolve(b.body));
        out.local_names.push_back(b.name);
    }

    // Reject cyclic where-bindings (depth-first over the reference graph).
    std::vector<int> state(out.locals.size(), 0); // 0 new, 1 active, 2 done
    std::function<void(std::uint32_t)> visit = [&](std::uint32_t i) {
        if (state[i] == 1)
            throw parse_error(ast.locals[i].loc,
                              "where-binding '" + out.local_names[i] + "' is recursive");
        if (state[i] == 2)
            return;
        state[i] = 1;
        std::set<std::uint32_t> refs;
        collect_local_refs(out.locals[i], refs);
        for (std::uint32_t r : refs)
            visit(r);
        state[i] = 2;
    };
    for (std::uint32_t i = 0; i < out.locals.size(); ++i)
        visit(i);
    return out;
}

namespace {

class Builder {
public:
    Builder(Graph& g, const BoundTerm& t, const std::unordered_map<std::string, NodeId>& bindings)
        : g_(g), term_(t), bindings_(bindings), local_nodes_(t.locals.size(), NodeId::invalid()) {}

    NodeId build(const Term& t) {
        switch (t.kind) {
        case Term::Kind::Var: {
            auto it = bindings_.find(t.var);
            if (it == bindings_.end())
                throw graph_error("unbound variable '" + t.var + "' while instantiating");
            return it->second;
        }
        case Term::Kind::Local: {
            NodeId& cached = local_nodes_[t.local];
            if (!cached.valid())
                cached = build(term_.locals[t.local]);
            return cached;
        }
        case Term::Kind::Call: {
            std::vector<NodeId> children;
            children.reserve(t.args.size());
            for (const Term& a : t.args)
                children.push_back(build(a));
            NodeId n = g_.add_node(t.sym, children);
            fresh_.push_back(n);
            return n;
        }
        }
        throw graph_error("corrupt term");
    }

    std::vector<NodeId> take_fresh() { return std::move(fresh_); }

private:
    Graph& g_;
    const BoundTerm& term_;
    const std::unordered_map<std::string, NodeId>& bindings_;
    std::vector<NodeId> local_nodes_;
    std::vector<NodeId> fresh_;
};

} // namespace

Instantiation instantiate(Graph& g, const BoundTerm& t,
                          const std::unordered_map<std::string, NodeId>& bindings) {
    Builder b(g, t, bindings);
    Instantiation out;
    out.root = b.build(t.body);
    out.fresh = b.take_fresh();
    return out;
}

Graph to_graph(const ExprWithWhere& ast, Program& p) {
    BoundTerm t = resolve_expr(ast, p, {});
    Graph g;
    Instantiation inst = instantiate(g, t, {});
    g.set_root(inst.root);
    std::vector<NodeId> dropped = g.gc(); // unused where-bindings do not linger
    (void)dropped;
    initialize_dominators(g);
    return g;
}

} // namespace bubbly
