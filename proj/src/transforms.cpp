#include "pegcfg/transforms.hpp"

#include <algorithm>
#include <map>

#include "pegcfg/automaton.hpp"
#include "pegcfg/block.hpp"
#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_ops.hpp"
#include "pegcfg/grammar_text.hpp"

namespace pegcfg {

std::string render_transformed(const TransformedGrammar& t) {
    return "# transform: " + t.provenance + "\n" + render_grammar(t.grammar);
}

Grammar reorder_ll1(const Grammar& g) {
    require_choice_structure(g);
    const NameSet nullable = nullable_nonterminals(g);
    Grammar out = g;
    for (const auto& [name, rhs] : g.productions()) {
        auto alts = choice_spine(rhs);
        auto sorted = alts;
        std::stable_partition(sorted.begin(), sorted.end(), [&](const Expr& a) { return !is_nullable(a, nullable); });
        if (sorted != alts) out = out.with_production(name, Expr::alternatives(sorted));
    }
    return out;
}

Expr string_to_expr(std::string_view x) { return Expr::literal(x); }

Expr choice_of(const StringSet& strings) {
    std::vector<Expr> alts;
    for (const auto& s : strings) alts.push_back(string_to_expr(s));
    return Expr::alternatives(alts);
}

namespace {

/// Rebuilds every production from its choice spine, letting `guard` rewrite
/// the i-th of n alternatives.
template <typename Guard>
std::vector<Grammar::Production> guard_alternatives(const Grammar& g, Guard&& guard) {
    std::vector<Grammar::Production> out;
    for (const auto& [name, rhs] : g.productions()) {
        auto alts = choice_spine(rhs);
        auto guarded = alts;
        for (std::size_t i = 0; i < alts.size(); ++i) guarded[i] = guard(name, alts[i], i, alts.size());
        out.emplace_back(name, guarded == alts ? rhs : Expr::alternatives(guarded));
    }
    return out;
}

/// Places `tail` at the end of a right-associated concatenation chain.
Expr append_at_end(const Expr& e, const Expr& tail) {
    if (e.is(ExprKind::Concat)) return Expr::concat(e.left(), append_at_end(e.right(), tail));
    if (e.is(ExprKind::Empty)) return tail;
    return Expr::concat(e, tail);
}

void require_strong_llk(const Grammar& g, std::size_t k) {
    auto report = is_strong_llk(g, k);
    if (!report.holds)
        throw GrammarError("grammar is not strong-LL(" + std::to_string(k) + "):\n" + describe(report));
}

Expr rename(const Expr& e, const std::map<std::string, std::string>& names) {
    switch (e.kind()) {
    case ExprKind::NonTerminal:
        return Expr::nonterminal(names.at(e.name()));
    case ExprKind::Concat:
        return Expr::concat(rename(e.left(), names), rename(e.right(), names));
    case ExprKind::Choice:
        return Expr::choice(rename(e.left(), names), rename(e.right(), names));
    case ExprKind::Not:
        return Expr::negation(rename(e.inner(), names));
    case ExprKind::Star:
        return Expr::star(rename(e.inner(), names));
    default:
        return e;
    }
}

Expr pi_expr(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::Empty:
        return Expr::terminal(kEndMarker);
    case ExprKind::Terminal:
        return Expr::concat(e, Expr::terminal(kEndMarker));
    case ExprKind::NonTerminal:
        return e;
    case ExprKind::Concat:
        return Expr::concat(e.left(), pi_expr(e.right()));
    case ExprKind::Choice:
        return Expr::choice(pi_expr(e.left()), pi_expr(e.right()));
    default:
        throw GrammarError("grammar is not right-linear");
    }
}

}  // namespace

TransformedGrammar phi_before(const Grammar& g, std::size_t k, bool exempt_last) {
    require_strong_llk(g, k);
    auto t = compute_tables(g, k);
    auto prods = guard_alternatives(t.grammar(), [&](const std::string& a, const Expr& p, std::size_t i, std::size_t n) {
        if (exempt_last && i + 1 == n) return p;
        return Expr::concat(Expr::and_predicate(choice_of(cat_k(t.first(p), t.follow(a), k))), p);
    });
    return {Grammar(t.grammar().start(), std::move(prods)), "phi_before k=" + std::to_string(k), k};
}

TransformedGrammar phi_after(const Grammar& g, std::size_t k, bool exempt_last) {
    require_strong_llk(g, k);
    auto t = compute_tables(g, k);
    auto prods = guard_alternatives(t.grammar(), [&](const std::string& a, const Expr& p, std::size_t i, std::size_t n) {
        if (exempt_last && i + 1 == n) return p;
        return append_at_end(p, Expr::and_predicate(choice_of(t.follow(a))));
    });
    return {Grammar(t.grammar().start(), std::move(prods)), "phi_after k=" + std::to_string(k), k};
}

TransformedGrammar pi_prefix(const Grammar& g) {
    if (!is_right_linear(g)) throw GrammarError("grammar is not right-linear");
    std::vector<Grammar::Production> prods;
    for (const auto& [name, rhs] : g.productions()) prods.emplace_back(name, pi_expr(rhs));
    return {Grammar(pi_expr(g.start()), std::move(prods)), "pi", 1};
}

TransformedGrammar rho_ll_regular(const Grammar& g, const RegularPartition& pi, bool exempt_last) {
    auto report = is_ll_regular(g, pi);
    if (!report.holds) throw GrammarError("grammar is not LL-regular for partition " + pi.name() + ":\n" + describe(report));
    Grammar base = remove_useless(g);

    NameSet taken(base.nonterminals().begin(), base.nonterminals().end());
    std::vector<std::map<std::string, std::string>> names(pi.blocks().size());
    std::map<std::string, Expr> block_start;
    for (std::size_t b = 0; b < pi.blocks().size(); ++b) {
        const auto& blk = pi.blocks()[b];
        for (const auto& n : blk.grammar.nonterminals()) {
            auto fresh = fresh_name("_" + blk.name + "_" + n, taken);
            taken.insert(fresh);
            names[b][n] = fresh;
        }
        block_start.emplace(blk.name, rename(blk.grammar.start(), names[b]));
    }

    auto prods = guard_alternatives(base, [&](const std::string& a, const Expr& p, std::size_t i, std::size_t n) {
        if (exempt_last && i + 1 == n) return p;
        std::vector<Expr> starts;
        for (const auto& b : block(base, p, a, pi)) starts.push_back(block_start.at(b));
        return Expr::concat(Expr::and_predicate(Expr::alternatives(starts)), p);
    });
    for (std::size_t b = 0; b < pi.blocks().size(); ++b)
        for (const auto& [n, rhs] : pi.blocks()[b].grammar.productions())
            prods.emplace_back(names[b].at(n), rename(rhs, names[b]));
    return {Grammar(base.start(), std::move(prods)), "rho partition=" + pi.name(), 1};
}

Expr erase_predicates(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::Not:
        return Expr::empty();
    case ExprKind::Concat:
        if (e.left().is(ExprKind::Not)) return erase_predicates(e.right());
        if (e.right().is(ExprKind::Not)) return erase_predicates(e.left());
        return Expr::concat(erase_predicates(e.left()), erase_predicates(e.right()));
    case ExprKind::Choice:
        return Expr::choice(erase_predicates(e.left()), erase_predicates(e.right()));
    case ExprKind::Star:
        return Expr::star(erase_predicates(e.inner()));
    default:
        return e;
    }
}

Grammar erase_predicates(const Grammar& g) {
    std::vector<Grammar::Production> prods;
    for (const auto& [name, rhs] : g.productions()) prods.emplace_back(name, erase_predicates(rhs));
    return Grammar(erase_predicates(g.start()), std::move(prods));
}

}  // namespace pegcfg
