#include "pegcfg/grammar.hpp"

#include <algorithm>

#include "pegcfg/errors.hpp"

namespace pegcfg {

Grammar::Grammar(Expr start, std::vector<Production> productions)
    : start_(std::move(start)), productions_(std::move(productions)) {
    for (std::size_t i = 0; i < productions_.size(); ++i) {
        const auto& name = productions_[i].first;
        if (name.empty()) throw GrammarError("empty non-terminal name");
        if (!index_.emplace(name, i).second) throw GrammarError("duplicate production for non-terminal " + name);
        order_.push_back(name);
    }
    auto check = [this](const std::string& n) {
        if (!index_.contains(n)) throw GrammarError("undeclared non-terminal " + n);
    };
    for_each_nonterminal(start_, check);
    for (const auto& [_, e] : productions_) for_each_nonterminal(e, check);
}

bool Grammar::has(std::string_view name) const { return index_.find(name) != index_.end(); }

const Expr& Grammar::production(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw GrammarError("undeclared non-terminal " + std::string(name));
    return productions_[it->second].second;
}

std::set<char> Grammar::terminals() const {
    std::set<char> out;
    auto add = [&](char c) { out.insert(c); };
    for_each_terminal(start_, add);
    for (const auto& [_, e] : productions_) for_each_terminal(e, add);
    return out;
}

std::string Grammar::alphabet() const {
    std::string out;
    for (char c : terminals())
        if (c != kEndMarker) out.push_back(c);
    return out;
}

bool Grammar::uses_marker() const { return terminals().contains(kEndMarker); }

bool Grammar::has_predicates() const {
    if (has_predicate(start_)) return true;
    return std::any_of(productions_.begin(), productions_.end(),
                       [](const Production& p) { return has_predicate(p.second); });
}

bool Grammar::has_repetitions() const {
    if (has_repetition(start_)) return true;
    return std::any_of(productions_.begin(), productions_.end(),
                       [](const Production& p) { return has_repetition(p.second); });
}

Grammar Grammar::with_start(Expr start) const { return Grammar(std::move(start), productions_); }

Grammar Grammar::with_production(const std::string& name, Expr expr) const {
    auto prods = productions_;
    auto it = index_.find(name);
    if (it != index_.end())
        prods[it->second].second = std::move(expr);
    else
        prods.emplace_back(name, std::move(expr));
    return Grammar(start_, std::move(prods));
}

bool operator==(const Grammar& a, const Grammar& b) {
    if (a.start_ != b.start_ || a.productions_.size() != b.productions_.size()) return false;
    for (const auto& [name, e] : a.productions_) {
        if (!b.has(name) || b.production(name) != e) return false;
    }
    return true;
}

namespace {

void collect_symbols(const Expr& e, std::vector<Expr>& out) {
    switch (e.kind()) {
    case ExprKind::Empty:
        break;
    case ExprKind::Terminal:
    case ExprKind::NonTerminal:
        out.push_back(e);
        break;
    case ExprKind::Concat:
        collect_symbols(e.left(), out);
        collect_symbols(e.right(), out);
        break;
    default:
        throw GrammarError("expected a sequence of symbols");
    }
}

}  // namespace

std::vector<Expr> symbols_of(const Expr& sequence) {
    std::vector<Expr> out;
    collect_symbols(sequence, out);
    return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string, std::less<>>& taken) {
    if (!taken.contains(base)) return base;
    for (int i = 2;; ++i) {
        auto candidate = base + "_" + std::to_string(i);
        if (!taken.contains(candidate)) return candidate;
    }
}

}  // namespace pegcfg
