#include "bubbly/dot.hpp"

#include <sstream>

namespace bubbly {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "digraph g {\n";
    if (g.root().valid())
        out << "  // root: n" << g.root().value() << "\n";
    for (NodeId n : g.live_nodes())
        out << "  n" << n.value() << " [label=\"" << escape(g.label(n)->name()) << "\"]\n";
    for (NodeId n : g.live_nodes()) {
        auto succ = g.successors(n);
        for (std::uint32_t i = 0; i < succ.size(); ++i)
            out << "  n" << n.value() << " -> n" << succ[i].value() << " [label=\"" << i
                << "\"]\n";
    }
    for (NodeId n : g.live_nodes())
        if (auto d = g.dominator(n))
            out << "  n" << n.value() << " -> n" << d->value()
                << " [style=dashed, color=gray, constraint=false]\n";
    out << "}\n";
    return out.str();
}

} // namespace bubbly
