#include "pegcfg/lookahead.hpp"

#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_text.hpp"

namespace pegcfg {

namespace {

using SetMap = std::map<std::string, StringSet, std::less<>>;

const StringSet kNone;

StringSet first_with(const Expr& e, const SetMap& first, std::size_t k) {
    switch (e.kind()) {
    case ExprKind::Empty:
        return {""};
    case ExprKind::Terminal:
        return {std::string(1, e.symbol())};
    case ExprKind::NonTerminal: {
        auto it = first.find(e.name());
        return it == first.end() ? StringSet{} : it->second;
    }
    case ExprKind::Concat:
        return cat_k(first_with(e.left(), first, k), first_with(e.right(), first, k), k);
    case ExprKind::Choice: {
        auto out = first_with(e.left(), first, k);
        auto r = first_with(e.right(), first, k);
        out.insert(r.begin(), r.end());
        return out;
    }
    default:
        throw GrammarError("lookahead sets are defined for predicate-free, desugared grammars only");
    }
}

bool merge_into(StringSet& dst, const StringSet& src) {
    auto before = dst.size();
    dst.insert(src.begin(), src.end());
    return dst.size() != before;
}

class FollowSolver {
public:
    FollowSolver(const Grammar& g, const SetMap& first, std::size_t k) : g_(g), first_(first), k_(k) {
        for (const auto& n : g.nonterminals()) follow_[n];
    }

    SetMap solve() {
        const StringSet seed{std::string(k_, kEndMarker)};
        do {
            changed_ = false;
            visit(g_.start(), seed);
            for (const auto& [name, rhs] : g_.productions()) {
                const StringSet f = follow_[name];
                if (!f.empty()) visit(rhs, f);
            }
        } while (changed_);
        return std::move(follow_);
    }

private:
    void visit(const Expr& e, const StringSet& f) {
        switch (e.kind()) {
        case ExprKind::NonTerminal:
            changed_ |= merge_into(follow_[e.name()], f);
            break;
        case ExprKind::Concat:
            visit(e.left(), cat_k(first_with(e.right(), first_, k_), f, k_));
            visit(e.right(), f);
            break;
        case ExprKind::Choice:
            visit(e.left(), f);
            visit(e.right(), f);
            break;
        default:
            break;
        }
    }

    const Grammar& g_;
    const SetMap& first_;
    std::size_t k_;
    SetMap follow_;
    bool changed_ = false;
};

std::string location_name(const std::string& nt) { return nt.empty() ? "start" : nt; }

}  // namespace

StringSet LookaheadTables::first(const Expr& e) const { return first_with(e, first_, k_); }

const StringSet& LookaheadTables::first(std::string_view nonterminal) const {
    auto it = first_.find(nonterminal);
    return it == first_.end() ? kNone : it->second;
}

const StringSet& LookaheadTables::follow(std::string_view nonterminal) const {
    auto it = follow_.find(nonterminal);
    return it == follow_.end() ? kNone : it->second;
}

LookaheadTables compute_tables(const Grammar& g, std::size_t k, std::size_t max_k) {
    if (k == 0) throw GrammarError("lookahead k must be positive");
    if (k > max_k) throw GrammarError("lookahead k=" + std::to_string(k) + " exceeds the limit of " + std::to_string(max_k));
    if (g.has_predicates()) throw GrammarError("lookahead sets are defined for predicate-free grammars only");
    if (g.has_repetitions()) throw GrammarError("repetition must be desugared before analysis");

    Grammar trimmed = remove_useless(g);
    SetMap first;
    for (const auto& n : trimmed.nonterminals()) first[n];
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [name, rhs] : trimmed.productions()) changed |= merge_into(first[name], first_with(rhs, first, k));
    }
    SetMap follow = FollowSolver(trimmed, first, k).solve();
    NameSet nullable = nullable_nonterminals(trimmed);
    return LookaheadTables(std::move(trimmed), k, std::move(nullable), std::move(first), std::move(follow));
}

void require_choice_structure(const Grammar& g) {
    if (g.has_predicates()) throw GrammarError("grammar contains predicates");
    if (g.has_repetitions()) throw GrammarError("repetition must be desugared before analysis");
    auto bnf = check_bnf(g);
    if (!bnf.property2_ok) throw GrammarError("grammar lacks BNF structure: the start expression is not a single non-terminal");
    if (!bnf.property1_violations.empty()) {
        const auto& v = bnf.property1_violations.front();
        throw GrammarError("grammar lacks BNF structure: choice inside a concatenation in " + location_name(v.nonterminal) +
                           ": " + v.expression);
    }
}

namespace {

template <typename Check>
void for_each_choice(const Grammar& g, Check&& check) {
    for (const auto& [name, rhs] : g.productions()) {
        auto walk = [&](auto&& self, const Expr& e) -> void {
            if (!e.is(ExprKind::Choice)) return;
            check(name, e.left(), e.right());
            self(self, e.left());
            self(self, e.right());
        };
        walk(walk, rhs);
    }
}

}  // namespace

ClassReport is_ll1(const Grammar& g) {
    require_choice_structure(g);
    auto t = compute_tables(g, 1);
    ClassReport report;
    for_each_choice(t.grammar(), [&](const std::string& a, const Expr& p1, const Expr& p2) {
        auto f1 = t.first(p1);
        auto f2 = t.first(p2);
        auto common = set_intersection(f1, f2);
        if (!common.empty()) report.add({a, render_expression(p1), render_expression(p2), "FIRST/FIRST", common});
        const auto& follow = t.follow(a);
        auto check_follow = [&](const StringSet& first, bool other_nullable) {
            if (!other_nullable) return;
            StringSet clash;
            for (const auto& s : set_intersection(first, follow))
                if (!s.empty()) clash.insert(s);
            if (!clash.empty()) report.add({a, render_expression(p1), render_expression(p2), "FIRST/FOLLOW", clash});
        };
        check_follow(f1, f2.contains(""));
        check_follow(f2, f1.contains(""));
    });
    return report;
}

ClassReport is_strong_llk(const Grammar& g, std::size_t k, std::size_t max_k) {
    require_choice_structure(g);
    auto t = compute_tables(g, k, max_k);
    ClassReport report;
    for_each_choice(t.grammar(), [&](const std::string& a, const Expr& p1, const Expr& p2) {
        const auto& follow = t.follow(a);
        auto common = set_intersection(cat_k(t.first(p1), follow, k), cat_k(t.first(p2), follow, k));
        if (!common.empty()) report.add({a, render_expression(p1), render_expression(p2), "FIRST_k/FOLLOW_k", common});
    });
    return report;
}

std::string describe(const ClassReport& r) {
    std::string out;
    for (const auto& v : r.violations)
        out += v.nonterminal + ": " + v.rule + " conflict between " + v.alternative + " and " + v.rest + " on " +
               format_set(v.witnesses) + "\n";
    return out;
}

}  // namespace pegcfg
