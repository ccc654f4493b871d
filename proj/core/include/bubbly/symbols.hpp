#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace bubbly {

enum class SymbolKind {
    Constructor,
    Operation,
    Choice,
};

// An interned label. Symbols are owned by a SymbolTable and referenced by
// pointer; pointer equality is identity.
class Symbol {
public:
    Symbol(std::string name, SymbolKind kind, int arity,
           std::optional<std::int64_t> literal = std::nullopt, bool builtin = false)
        : name_(std::move(name)), kind_(kind), arity_(arity), literal_(literal), builtin_(builtin) {}

    const std::string& name() const { return name_; }
    SymbolKind kind() const { return kind_; }
    int arity() const { return arity_; }
    bool is_constructor() const { return kind_ == SymbolKind::Constructor; }
    bool is_operation() const { return kind_ == SymbolKind::Operation; }
    bool is_choice() const { return kind_ == SymbolKind::Choice; }
    // Integer literals are nullary constructors carrying their value.
    std::optional<std::int64_t> literal() const { return literal_; }
    bool builtin() const { return builtin_; }

private:
    std::string name_;
    SymbolKind kind_;
    int arity_;
    std::optional<std::int64_t> literal_;
    bool builtin_;
};

// Interning table. Addresses of interned symbols are stable for the table's
// lifetime; graphs hold plain pointers and must not outlive their table.
class SymbolTable {
public:
    SymbolTable();

    // Interns a new symbol or returns the existing one when name, kind and
    // arity all agree. Conflicting redeclaration throws.
    const Symbol* intern(std::string_view name, SymbolKind kind, int arity);

    // nullptr when absent.
    const Symbol* find(std::string_view name) const;

    // The nullary constructor for an integer value, interned on demand.
    const Symbol* literal(std::int64_t value);

    const Symbol* choice() const { return choice_; }
    const Symbol* true_sym() const { return true_; }
    const Symbol* false_sym() const { return false_; }

    // Binary integer primitives: + - * / ^ > < ==
    bool is_builtin_op(const Symbol* s) const { return s != nullptr && s->builtin(); }

private:
    const Symbol* add(std::string name, SymbolKind kind, int arity,
                      std::optional<std::int64_t> literal = std::nullopt, bool builtin = false);

    std::deque<Symbol> storage_;
    std::unordered_map<std::string_view, const Symbol*> index_;
    const Symbol* choice_ = nullptr;
    const Symbol* true_ = nullptr;
    const Symbol* false_ = nullptr;
};

} // namespace bubbly
