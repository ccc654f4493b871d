#include "bubbly/evaluator.hpp"

#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "bubbly/bubbling.hpp"
#include "bubbly/dominance.hpp"
#include "bubbly/parser.hpp"
#include "bubbly/rewrite.hpp"

namespace bubbly {

namespace {

// Leftmost-outermost non-constructor node in preorder; invalid when the graph
// already is a constructor normal form.
NodeId find_demanded(const Graph& g) {
    std::vector<NodeId> stack{g.root()};
    std::unordered_set<NodeId> seen;
    while (!stack.empty()) {
        NodeId n = stack.back();
        stack.pop_back();
        if (!seen.insert(n).second)
            continue;
        if (!g.label(n)->is_constructor())
            return n;
        auto succ = g.successors(n);
        for (auto it = succ.rbegin(); it != succ.rend(); ++it)
            stack.push_back(*it);
    }
    return NodeId::invalid();
}

NodeId at_position(const Graph& g, NodeId base, const std::vector<std::uint32_t>& pos) {
    NodeId n = base;
    for (std::uint32_t idx : pos)
        n = g.successor(n, idx);
    return n;
}

// Copying-strategy resolution: a full copy with the choice replaced by one
// alternative, garbage collected, its dominator attribute recomputed whole.
Graph copy_resolve(const Graph& g, NodeId c, ChoiceSide side) {
    std::unordered_map<std::uint32_t, NodeId> map;
    Graph out = g.clone(&map);
    NodeId choice_copy = map.at(c.value());
    NodeId alt_copy = out.successor(choice_copy, static_cast<std::uint32_t>(side));
    out.replace(choice_copy, alt_copy);
    out.gc();
    initialize_dominators(out);
    return out;
}

struct DtApply {
    const Rule* rule;
    Match m;
};
struct DtFail {
    std::string reason;
    NodeId at;
};
struct DtDescend {
    NodeId next;
};
using DtOutcome = std::variant<DtApply, DtFail, DtDescend>;

DtOutcome descend(const Graph& g, NodeId f, const DefTree* t) {
    while (t->kind == DefTree::Kind::Branch) {
        NodeId n = at_position(g, f, t->position);
        const Symbol* lab = g.label(n);
        if (!lab->is_constructor())
            return DtDescend{n};
        const DefTree* child = nullptr;
        for (const auto& [sym, sub] : t->children)
            if (sym == lab) {
                child = sub.get();
                break;
            }
        if (!child)
            return DtFail{"no rule for '" + g.label(f)->name() + "' matches constructor '" +
                              lab->name() + "'",
                          n};
        t = child;
    }
    MatchResult r = match_rule(g, f, *t->rule);
    if (auto* m = std::get_if<Match>(&r))
        return DtApply{t->rule, std::move(*m)};
    if (auto* d = std::get_if<Demand>(&r))
        return DtDescend{d->at};
    return DtFail{"rule for '" + g.label(f)->name() + "' does not match", f};
}

StepResult step_impl(Graph& g, Program& p, Strategy strategy, std::mutex* intern_mu) {
    if (!p.prepared())
        throw graph_error("program has not passed the rule-system checks");
    StepResult out;

    auto split_at = [&](NodeId c) {
        out.kind = StepResult::Kind::Split;
        out.site = c;
        out.detail = "?";
        if (strategy == Strategy::Bubbling) {
            out.left = g.extract_alternative(ChoiceSide::Left);
            out.right = g.extract_alternative(ChoiceSide::Right);
        } else {
            out.left = copy_resolve(g, c, ChoiceSide::Left);
            out.right = copy_resolve(g, c, ChoiceSide::Right);
        }
    };

    if (g.label(g.root())->is_choice()) {
        split_at(g.root());
        return out;
    }

    NodeId focus = find_demanded(g);
    if (!focus.valid()) {
        out.kind = StepResult::Kind::Value;
        out.site = g.root();
        out.detail = print_value(g, g.root());
        return out;
    }

    for (;;) {
        const Symbol* lab = g.label(focus);
        if (lab->is_choice()) {
            if (strategy == Strategy::Bubbling) {
                out.kind = StepResult::Kind::Bubble;
                out.site = focus;
                bubble(g, focus, &out.bubble);
                return out;
            }
            split_at(focus);
            return out;
        }
        if (lab->builtin()) {
            NodeId args[2] = {g.successor(focus, 0), g.successor(focus, 1)};
            NodeId pending = NodeId::invalid();
            for (int i = 0; i < 2 && !pending.valid(); ++i) {
                const Symbol* al = g.label(args[i]);
                if (al->is_constructor()) {
                    if (!al->literal()) {
                        out.kind = StepResult::Kind::Fail;
                        out.site = args[i];
                        out.detail = "'" + lab->name() + "' applied to non-integer '" +
                                     al->name() + "'";
                        return out;
                    }
                } else {
                    pending = args[i];
                }
            }
            if (pending.valid()) {
                focus = pending;
                continue;
            }
            std::optional<const Symbol*> res;
            {
                std::optional<std::lock_guard<std::mutex>> lk;
                if (intern_mu)
                    lk.emplace(*intern_mu);
                res = eval_builtin(p.symbols(), lab, g.label(args[0]), g.label(args[1]));
            }
            if (!res) {
                out.kind = StepResult::Kind::Fail;
                out.site = focus;
                out.detail = "undefined arithmetic: " + g.label(args[0])->name() + " " +
                             lab->name() + " " + g.label(args[1])->name();
                return out;
            }
            out.kind = StepResult::Kind::Builtin;
            out.site = focus;
            out.detail = lab->name();
            builtin_step(g, focus, *res);
            return out;
        }
        const DefTree* t = p.tree(lab);
        if (t == nullptr)
            throw graph_error("operation '" + lab->name() + "' has no definitional tree");
        DtOutcome o = descend(g, focus, t);
        if (auto* a = std::get_if<DtApply>(&o)) {
            out.kind = StepResult::Kind::Rewrite;
            out.site = focus;
            out.detail = lab->name();
            rewrite_at(g, focus, *a->rule, a->m);
            return out;
        }
        if (auto* fl = std::get_if<DtFail>(&o)) {
            out.kind = StepResult::Kind::Fail;
            out.site = fl->at;
            out.detail = fl->reason;
            return out;
        }
        focus = std::get<DtDescend>(o).next;
    }
}

void fold_writes(WriteCounters& into, const WriteCounters& from) {
    into.label_writes += from.label_writes;
    into.successor_writes += from.successor_writes;
    into.pred_writes += from.pred_writes;
    into.dominator_writes += from.dominator_writes;
}

void validate_or_throw(const Graph& g, const char* when) {
    GraphCheck sc = check_structure(g);
    if (!sc.ok) {
        std::string msg = std::string("structural check failed ") + when + ":";
        for (const std::string& prob : sc.problems)
            msg += "\n  " + prob;
        throw validation_error(msg);
    }
    DominatorReport dr = validate_attribute(g);
    if (!dr.ok) {
        std::string msg = std::string("dominator attribute unsound ") + when + ":";
        for (const std::string& prob : dr.problems)
            msg += "\n  " + prob;
        throw validation_error(msg);
    }
}

std::string node_ref(NodeId n) { return "n" + std::to_string(n.value()); }

class Driver {
public:
    Driver(Program& p, const EvalConfig& cfg) : p_(p), cfg_(cfg) {}

    ValueSet run(Graph g0) {
        {
            Computation c;
            c.id = next_id_++;
            c.graph = std::move(g0);
            queue_.push_back(std::move(c));
        }
        unsigned jobs = cfg_.jobs < 1 ? 1 : (cfg_.jobs > 64 ? 64 : cfg_.jobs);
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(jobs);
            for (unsigned i = 0; i < jobs; ++i)
                pool.emplace_back([this] { worker(); });
            for (std::thread& t : pool)
                t.join();
        }
        if (error_)
            std::rethrow_exception(error_);
        std::lock_guard<std::mutex> lk(mu_);
        out_.exhausted = queue_.empty();
        out_.steps_used = total_steps_;
        for (Computation& c : queue_) // suspended by a budget
            fold(c);
        queue_.clear();
        return std::move(out_);
    }

private:
    void fold(Computation& c) { fold_writes(out_.stats.writes, c.graph.write_counters()); }

    void worker() {
        std::unique_lock<std::mutex> lk(mu_);
        for (;;) {
            cv_.wait(lk, [&] {
                return stop_ || error_ != nullptr || !queue_.empty() || in_flight_ == 0;
            });
            if (stop_ || error_)
                return;
            if (queue_.empty()) {
                if (in_flight_ == 0) {
                    cv_.notify_all();
                    return;
                }
                continue;
            }
            if (out_.values.size() >= cfg_.max_values || total_steps_ >= cfg_.max_steps) {
                stop_ = true;
                cv_.notify_all();
                return;
            }
            Computation comp = std::move(queue_.front());
            queue_.pop_front();
            ++in_flight_;
            lk.unlock();

            StepResult r;
            try {
                r = step_impl(comp.graph, p_, cfg_.strategy, &lit_mu_);
                if (cfg_.validate_every_step) {
                    switch (r.kind) {
                    case StepResult::Kind::Rewrite:
                    case StepResult::Kind::Builtin:
                    case StepResult::Kind::Bubble:
                        validate_or_throw(comp.graph, "after a step");
                        break;
                    case StepResult::Kind::Split:
                        validate_or_throw(*r.left, "in a split alternative");
                        validate_or_throw(*r.right, "in a split alternative");
                        break;
                    default:
                        break;
                    }
                }
            } catch (...) {
                lk.lock();
                error_ = std::current_exception();
                --in_flight_;
                cv_.notify_all();
                return;
            }

            lk.lock();
            --in_flight_;
            settle(comp, r);
            cv_.notify_all();
        }
    }

    // Queue motion, statistics and callbacks for one finished step.
    // Runs under the driver lock.
    void settle(Computation& comp, StepResult& r) {
        using K = StepResult::Kind;
        bool counted = r.kind != K::Value; // reaching a value is a detection, not a step
        if (counted) {
            ++total_steps_;
            ++comp.steps;
        }

        const char* kind_name = nullptr;
        std::string sites;
        switch (r.kind) {
        case K::Value: {
            bool fresh = out_.values.insert(r.detail).second;
            if (!fresh)
                ++out_.stats.duplicate_values;
            ++out_.counts[r.detail];
            fold(comp);
            break;
        }
        case K::Fail:
            ++out_.stats.failures;
            kind_name = "fail";
            sites = node_ref(r.site);
            fold(comp);
            break;
        case K::Rewrite:
            ++out_.stats.rewrites;
            kind_name = "rewrite";
            sites = node_ref(r.site);
            break;
        case K::Builtin:
            ++out_.stats.builtin_rewrites;
            kind_name = "rewrite";
            sites = node_ref(r.site);
            break;
        case K::Bubble:
            ++out_.stats.bubbles;
            out_.stats.clones_created += r.bubble.fresh_surviving;
            comp.clones += r.bubble.fresh_surviving;
            kind_name = "bubble";
            sites = node_ref(r.site) + "->" + node_ref(r.bubble.destination);
            r.detail = "path=" + std::to_string(r.bubble.path_nodes);
            break;
        case K::Split:
            ++out_.stats.splits;
            out_.stats.clones_created += r.left->live_count() + r.right->live_count();
            kind_name = "split";
            sites = node_ref(r.site);
            fold(comp);
            break;
        }

        if (counted && cfg_.trace && kind_name) {
            std::ostringstream line;
            line << total_steps_ << '\t' << comp.id << '\t' << kind_name << '\t' << sites << '\t'
                 << r.detail << '\t'
                 << "rewrites=" << out_.stats.rewrites + out_.stats.builtin_rewrites
                 << " bubbles=" << out_.stats.bubbles << " splits=" << out_.stats.splits
                 << " fails=" << out_.stats.failures << " values=" << out_.values.size();
            cfg_.trace(line.str());
        }
        if (counted && cfg_.snapshot) {
            if (r.kind == K::Split) {
                cfg_.snapshot(*r.left, total_steps_);
                cfg_.snapshot(*r.right, total_steps_);
            } else if (r.kind != K::Fail) {
                cfg_.snapshot(comp.graph, total_steps_);
            }
        }

        if (r.kind == K::Split) {
            Computation l, rt;
            l.id = next_id_++;
            l.graph = std::move(*r.left);
            rt.id = next_id_++;
            rt.graph = std::move(*r.right);
            queue_.push_back(std::move(l));
            queue_.push_back(std::move(rt));
        } else if (r.kind == K::Rewrite || r.kind == K::Builtin || r.kind == K::Bubble) {
            queue_.push_back(std::move(comp));
        }
    }

    Program& p_;
    const EvalConfig& cfg_;
    std::mutex mu_;
    std::condition_variable cv_;
    std::mutex lit_mu_; // guards literal interning, the one shared mutation
    std::deque<Computation> queue_;
    std::size_t in_flight_ = 0;
    std::uint64_t total_steps_ = 0;
    std::uint64_t next_id_ = 0;
    bool stop_ = false;
    std::exception_ptr error_;
    ValueSet out_;
};

} // namespace

StepResult step(Graph& g, Program& p, Strategy strategy) {
    return step_impl(g, p, strategy, nullptr);
}

StepResult::Kind normalize(Graph& g, Program& p, Strategy strategy, std::uint64_t max_steps) {
    for (std::uint64_t i = 0; i <= max_steps; ++i) {
        StepResult r = step(g, p, strategy);
        if (r.kind == StepResult::Kind::Value || r.kind == StepResult::Kind::Fail ||
            r.kind == StepResult::Kind::Split)
            return r.kind;
    }
    throw graph_error("normalize: step budget exceeded");
}

ValueSet compute_values(Graph g, Program& p, const EvalConfig& cfg) {
    Driver d(p, cfg);
    return d.run(std::move(g));
}

ValueSet compute_values(const ExprWithWhere& expr, Program& p, const EvalConfig& cfg) {
    return compute_values(to_graph(expr, p), p, cfg);
}

} // namespace bubbly
