#include "pegcfg/grammar_ops.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_text.hpp"

namespace pegcfg {

namespace {

NameSet names_of(const Grammar& g) {
    return NameSet(g.nonterminals().begin(), g.nonterminals().end());
}

class Desugarer {
public:
    explicit Desugarer(const Grammar& g) : taken_(names_of(g)) {}

    Expr rewrite(const Expr& e) {
        switch (e.kind()) {
        case ExprKind::Concat: return Expr::concat(rewrite(e.left()), rewrite(e.right()));
        case ExprKind::Choice: return Expr::choice(rewrite(e.left()), rewrite(e.right()));
        case ExprKind::Not: return Expr::negation(rewrite(e.inner()));
        case ExprKind::Star: return Expr::nonterminal(name_for(rewrite(e.inner())));
        default: return e;
        }
    }

    std::vector<Grammar::Production> fresh;

private:
    const std::string& name_for(const Expr& body) {
        for (const auto& [b, n] : seen_)
            if (b == body) return n;
        std::string name;
        do name = "_R" + std::to_string(++counter_);
        while (taken_.contains(name));
        taken_.insert(name);
        fresh.emplace_back(name, Expr::choice(Expr::concat(body, Expr::nonterminal(name)), Expr::empty()));
        seen_.emplace_back(body, name);
        return seen_.back().second;
    }

    NameSet taken_;
    std::vector<std::pair<Expr, std::string>> seen_;
    int counter_ = 0;
};

}  // namespace

Grammar desugar(const Grammar& g) {
    if (!g.has_repetitions()) return g;
    Desugarer d(g);
    Expr start = d.rewrite(g.start());
    std::vector<Grammar::Production> prods;
    for (const auto& [name, e] : g.productions()) prods.emplace_back(name, d.rewrite(e));
    for (auto& p : d.fresh) prods.push_back(std::move(p));
    return Grammar(std::move(start), std::move(prods));
}

Grammar cfg_to_pecfg(const ProductionList& pl) {
    if (pl.rules.empty()) throw GrammarError("production list is empty");
    std::vector<std::string> order;
    std::map<std::string, std::vector<Expr>> alts;
    for (const auto& r : pl.rules) {
        symbols_of(r.rhs);  // throws unless rhs is a plain symbol sequence
        auto [it, inserted] = alts.try_emplace(r.lhs);
        if (inserted) order.push_back(r.lhs);
        it->second.push_back(r.rhs);
    }
    if (!alts.contains(pl.start)) throw GrammarError("start non-terminal " + pl.start + " has no productions");
    std::vector<Grammar::Production> prods;
    for (const auto& name : order) prods.emplace_back(name, Expr::alternatives(alts[name]));
    return Grammar(Expr::nonterminal(pl.start), std::move(prods));
}

std::vector<Expr> distribute(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::Empty:
    case ExprKind::Terminal:
    case ExprKind::NonTerminal:
        return {e};
    case ExprKind::Choice: {
        auto out = distribute(e.left());
        auto rhs = distribute(e.right());
        out.insert(out.end(), rhs.begin(), rhs.end());
        return out;
    }
    case ExprKind::Concat: {
        auto lhs = distribute(e.left());
        auto rhs = distribute(e.right());
        std::vector<Expr> out;
        for (const auto& a : lhs) {
            for (const auto& b : rhs) {
                auto syms = symbols_of(a);
                auto tail = symbols_of(b);
                syms.insert(syms.end(), tail.begin(), tail.end());
                out.push_back(Expr::sequence(syms));
            }
        }
        return out;
    }
    case ExprKind::Not: throw GrammarError("predicate found; not expressible as a traditional CFG");
    case ExprKind::Star: throw GrammarError("repetition found; desugar the grammar first");
    }
    return {};
}

ProductionList pecfg_to_cfg(const Grammar& g) {
    if (!g.start().is(ExprKind::NonTerminal))
        throw GrammarError("start expression must be a single non-terminal; normalize the grammar first");
    ProductionList pl;
    pl.start = g.start().name();
    for (const auto& [name, e] : g.productions()) {
        std::vector<Expr> kept;
        for (auto& alt : distribute(e)) {
            // Normalize to a right-associated symbol sequence before comparing.
            Expr seq = Expr::sequence(symbols_of(alt));
            if (std::find(kept.begin(), kept.end(), seq) == kept.end()) kept.push_back(seq);
        }
        for (auto& alt : kept) pl.rules.push_back({name, std::move(alt)});
    }
    return pl;
}

bool is_nullable(const Expr& e, const NameSet& nullable) {
    switch (e.kind()) {
    case ExprKind::Empty:
    case ExprKind::Not:
    case ExprKind::Star:
        return true;
    case ExprKind::Terminal:
        return false;
    case ExprKind::NonTerminal:
        return nullable.contains(e.name());
    case ExprKind::Concat:
        return is_nullable(e.left(), nullable) && is_nullable(e.right(), nullable);
    case ExprKind::Choice:
        return is_nullable(e.left(), nullable) || is_nullable(e.right(), nullable);
    }
    return false;
}

NameSet nullable_nonterminals(const Grammar& g) {
    NameSet out;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [name, e] : g.productions()) {
            if (!out.contains(name) && is_nullable(e, out)) {
                out.insert(name);
                changed = true;
            }
        }
    }
    return out;
}

namespace {

void find_nested_choices(const Expr& e, bool under_concat, const std::string& owner,
                         std::vector<BnfLocation>& out) {
    switch (e.kind()) {
    case ExprKind::Choice:
        if (under_concat) {
            out.push_back({owner, render_expression(e)});
            return;
        }
        find_nested_choices(e.left(), false, owner, out);
        find_nested_choices(e.right(), false, owner, out);
        break;
    case ExprKind::Concat:
        find_nested_choices(e.left(), true, owner, out);
        find_nested_choices(e.right(), true, owner, out);
        break;
    case ExprKind::Not:
    case ExprKind::Star:
        find_nested_choices(e.inner(), under_concat, owner, out);
        break;
    default:
        break;
    }
}

void find_misordered_choices(const Expr& e, const NameSet& nullable, const std::string& owner,
                             std::vector<BnfLocation>& out) {
    switch (e.kind()) {
    case ExprKind::Choice:
        if (is_nullable(e.left(), nullable) && !is_nullable(e.right(), nullable))
            out.push_back({owner, render_expression(e)});
        [[fallthrough]];
    case ExprKind::Concat:
        find_misordered_choices(e.left(), nullable, owner, out);
        find_misordered_choices(e.right(), nullable, owner, out);
        break;
    case ExprKind::Not:
    case ExprKind::Star:
        find_misordered_choices(e.inner(), nullable, owner, out);
        break;
    default:
        break;
    }
}

}  // namespace

BnfReport check_bnf(const Grammar& g) {
    BnfReport r;
    auto nullable = nullable_nonterminals(g);
    r.property2_ok = g.start().is(ExprKind::NonTerminal);
    find_nested_choices(g.start(), false, "", r.property1_violations);
    find_misordered_choices(g.start(), nullable, "", r.property3_violations);
    for (const auto& [name, e] : g.productions()) {
        find_nested_choices(e, false, name, r.property1_violations);
        find_misordered_choices(e, nullable, name, r.property3_violations);
    }
    return r;
}

Grammar normalize_bnf(const Grammar& g) {
    if (g.has_predicates()) throw GrammarError("normalize_bnf requires a predicate-free grammar");
    auto flatten_if_needed = [](const Expr& e) {
        std::vector<BnfLocation> v;
        find_nested_choices(e, false, "", v);
        return v.empty() ? e : Expr::alternatives(distribute(e));
    };
    std::vector<Grammar::Production> prods;
    for (const auto& [name, e] : g.productions()) prods.emplace_back(name, flatten_if_needed(e));
    Expr start = g.start();
    if (!start.is(ExprKind::NonTerminal)) {
        auto taken = names_of(g);
        std::string name;
        int n = 0;
        do name = "_R" + std::to_string(++n);
        while (taken.contains(name));
        prods.emplace_back(name, flatten_if_needed(start));
        start = Expr::nonterminal(name);
    }
    return Grammar(std::move(start), std::move(prods));
}

namespace {

void leftmost_nonterminals(const Expr& e, const NameSet& nullable, NameSet& out) {
    switch (e.kind()) {
    case ExprKind::NonTerminal:
        out.insert(e.name());
        break;
    case ExprKind::Concat:
        leftmost_nonterminals(e.left(), nullable, out);
        if (is_nullable(e.left(), nullable)) leftmost_nonterminals(e.right(), nullable, out);
        break;
    case ExprKind::Choice:
        leftmost_nonterminals(e.left(), nullable, out);
        leftmost_nonterminals(e.right(), nullable, out);
        break;
    case ExprKind::Not:
    case ExprKind::Star:
        leftmost_nonterminals(e.inner(), nullable, out);
        break;
    default:
        break;
    }
}

}  // namespace

NameSet left_recursive_nonterminals(const Grammar& g) {
    auto nullable = nullable_nonterminals(g);
    std::map<std::string, NameSet> edges;
    for (const auto& [name, e] : g.productions()) leftmost_nonterminals(e, nullable, edges[name]);

    // closure[A] = non-terminals reachable from A in one or more leftmost steps
    std::map<std::string, NameSet> closure;
    for (const auto& name : g.nonterminals()) {
        NameSet& seen = closure[name];
        std::deque<std::string> work(edges[name].begin(), edges[name].end());
        while (!work.empty()) {
            auto n = work.front();
            work.pop_front();
            if (!seen.insert(n).second) continue;
            for (const auto& m : edges[n]) work.push_back(m);
        }
    }
    NameSet cyclic;
    for (const auto& name : g.nonterminals())
        if (closure[name].contains(name)) cyclic.insert(name);
    NameSet out;
    for (const auto& name : g.nonterminals()) {
        const auto& reach = closure[name];
        if (std::any_of(reach.begin(), reach.end(), [&](const std::string& n) { return cyclic.contains(n); }))
            out.insert(name);
    }
    return out;
}

namespace {

bool productive(const Expr& e, const NameSet& prod) {
    switch (e.kind()) {
    case ExprKind::NonTerminal: return prod.contains(e.name());
    case ExprKind::Concat: return productive(e.left(), prod) && productive(e.right(), prod);
    case ExprKind::Choice: return productive(e.left(), prod) || productive(e.right(), prod);
    default: return true;
    }
}

std::optional<Expr> prune(const Expr& e, const NameSet& prod) {
    switch (e.kind()) {
    case ExprKind::NonTerminal:
        if (!prod.contains(e.name())) return std::nullopt;
        return e;
    case ExprKind::Concat: {
        auto l = prune(e.left(), prod);
        auto r = prune(e.right(), prod);
        if (!l || !r) return std::nullopt;
        if (l->id() == e.left().id() && r->id() == e.right().id()) return e;
        return Expr::concat(*l, *r);
    }
    case ExprKind::Choice: {
        auto l = prune(e.left(), prod);
        auto r = prune(e.right(), prod);
        if (l && r) {
            if (l->id() == e.left().id() && r->id() == e.right().id()) return e;
            return Expr::choice(*l, *r);
        }
        return l ? l : r;
    }
    case ExprKind::Not:
    case ExprKind::Star: {
        // A predicate or repetition over something that can never match
        // reduces to ε.
        auto i = prune(e.inner(), prod);
        if (!i) return Expr::empty();
        if (i->id() == e.inner().id()) return e;
        return e.is(ExprKind::Not) ? Expr::negation(*i) : Expr::star(*i);
    }
    default:
        return e;
    }
}

}  // namespace

Grammar remove_useless(const Grammar& g) {
    NameSet prod;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [name, e] : g.productions()) {
            if (!prod.contains(name) && productive(e, prod)) {
                prod.insert(name);
                changed = true;
            }
        }
    }
    auto start = prune(g.start(), prod);
    if (!start) throw GrammarError("empty language: the start expression is non-productive");

    std::map<std::string, Expr, std::less<>> pruned;
    for (const auto& name : g.nonterminals())
        if (prod.contains(name)) pruned.emplace(name, *prune(g.production(name), prod));

    NameSet reachable;
    std::deque<std::string> work;
    auto visit = [&](const std::string& n) {
        if (reachable.insert(n).second) work.push_back(n);
    };
    for_each_nonterminal(*start, visit);
    while (!work.empty()) {
        auto n = work.front();
        work.pop_front();
        for_each_nonterminal(pruned.at(n), visit);
    }

    std::vector<Grammar::Production> prods;
    for (const auto& name : g.nonterminals())
        if (reachable.contains(name)) prods.emplace_back(name, pruned.at(name));
    return Grammar(*start, std::move(prods));
}

}  // namespace pegcfg
