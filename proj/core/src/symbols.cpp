#include "bubbly/symbols.hpp"

#include <stdexcept>

namespace bubbly {

SymbolTable::SymbolTable() {
    choice_ = add("?", SymbolKind::Choice, 2);
    true_ = add("True", SymbolKind::Constructor, 0);
    false_ = add("False", SymbolKind::Constructor, 0);
    for (const char* op : {"+", "-", "*", "/", "^", ">", "<", "=="})
        add(op, SymbolKind::Operation, 2, std::nullopt, true);
}

const Symbol* SymbolTable::add(std::string name, SymbolKind kind, int arity,
                               std::optional<std::int64_t> literal, bool builtin) {
    storage_.emplace_back(std::move(name), kind, arity, literal, builtin);
    const Symbol* s = &storage_.back();
    index_.emplace(s->name(), s);
    return s;
}

const Symbol* SymbolTable::intern(std::string_view name, SymbolKind kind, int arity) {
    if (const Symbol* existing = find(name)) {
        if (existing->kind() != kind || existing->arity() != arity)
            throw std::invalid_argument("symbol '" + std::string(name) +
                                        "' redeclared with a different kind or arity");
        return existing;
    }
    return add(std::string(name), kind, arity);
}

const Symbol* SymbolTable::find(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : it->second;
}

const Symbol* SymbolTable::literal(std::int64_t value) {
    std::string name = std::to_string(value);
    if (const Symbol* existing = find(name))
        return existing;
    return add(std::move(name), SymbolKind::Constructor, 0, value);
}

} // namespace bubbly
