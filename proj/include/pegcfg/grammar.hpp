#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pegcfg/expr.hpp"

namespace pegcfg {

/// A grammar (V, T, P, p_S): a total map from non-terminals to parsing
/// expressions plus a start expression. Whether it is read as a CFG or as a
/// PEG depends only on which matcher is applied.
///
/// T is implicit: the characters appearing as terminals. Construction checks
/// that every referenced non-terminal has exactly one production.
class Grammar {
public:
    using Production = std::pair<std::string, Expr>;

    Grammar(Expr start, std::vector<Production> productions);

    const Expr& start() const noexcept { return start_; }
    /// Non-terminals in declaration order.
    const std::vector<std::string>& nonterminals() const noexcept { return order_; }
    const std::vector<Production>& productions() const noexcept { return productions_; }

    bool has(std::string_view name) const;
    /// Throws GrammarError for an unknown non-terminal.
    const Expr& production(std::string_view name) const;

    /// Terminal characters in use, including the end marker if present.
    std::set<char> terminals() const;
    /// Sorted terminal characters, excluding the end marker.
    std::string alphabet() const;
    bool uses_marker() const;
    bool has_predicates() const;
    bool has_repetitions() const;

    Grammar with_start(Expr start) const;
    /// Replaces the production of an existing non-terminal or appends a new one.
    Grammar with_production(const std::string& name, Expr expr) const;

    /// Structural equality; declaration order is irrelevant.
    friend bool operator==(const Grammar& a, const Grammar& b);

private:
    Expr start_;
    std::vector<Production> productions_;
    std::vector<std::string> order_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// One entry of the traditional production-relation view.
struct ProductionRule {
    std::string lhs;
    Expr rhs;  // choice-free, predicate-free, repetition-free

    friend bool operator==(const ProductionRule&, const ProductionRule&) = default;
};

struct ProductionList {
    std::string start;
    std::vector<ProductionRule> rules;

    friend bool operator==(const ProductionList&, const ProductionList&) = default;
};

/// Flattens a choice-free expression into its symbol sequence, dropping ε.
/// Throws GrammarError on Choice, Not or Star.
std::vector<Expr> symbols_of(const Expr& sequence);

/// A name based on `base` that is not in `taken`.
std::string fresh_name(const std::string& base, const std::set<std::string, std::less<>>& taken);

}  // namespace pegcfg
