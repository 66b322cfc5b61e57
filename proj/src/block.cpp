#include "pegcfg/block.hpp"

#include <map>

#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_ops.hpp"
#include "pegcfg/grammar_text.hpp"

namespace pegcfg {

namespace {

/// Symbols of the internal grammar: non-negative values are non-terminals,
/// negative values encode a terminal character.
using Symbol = int;

Symbol terminal_symbol(char c) { return -1 - static_cast<unsigned char>(c); }
char symbol_char(Symbol s) { return static_cast<char>(-1 - s); }

struct Rule {
    Symbol lhs;
    std::vector<Symbol> rhs;
};

using StateSet = std::vector<bool>;

/// For every non-terminal N and automaton state q, the states reachable from
/// q by reading some string derived from N (the Bar-Hillel triples).
class Intersection {
public:
    Intersection(const std::vector<Rule>& rules, std::size_t symbols, const Dfa& dfa)
        : rules_(rules), dfa_(dfa), reach_(symbols, std::vector<StateSet>(dfa.size(), StateSet(dfa.size(), false))) {
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& r : rules_)
                for (std::size_t q = 0; q < dfa_.size(); ++q) {
                    StateSet out = run(r.rhs, q);
                    auto& dst = reach_[r.lhs][q];
                    for (std::size_t s = 0; s < out.size(); ++s)
                        if (out[s] && !dst[s]) dst[s] = changed = true;
                }
        }
    }

    bool nonempty(Symbol root) const {
        const auto& to = reach_[root][dfa_.start];
        for (std::size_t s = 0; s < to.size(); ++s)
            if (to[s] && dfa_.accepting[s]) return true;
        return false;
    }

private:
    StateSet run(const std::vector<Symbol>& seq, std::size_t q) const {
        StateSet cur(dfa_.size(), false);
        cur[q] = true;
        for (Symbol sym : seq) {
            StateSet next(dfa_.size(), false);
            bool any = false;
            for (std::size_t p = 0; p < cur.size(); ++p) {
                if (!cur[p]) continue;
                if (sym < 0) {
                    auto i = dfa_.symbol_index(symbol_char(sym));
                    if (i == std::string::npos) continue;
                    next[dfa_.delta[p][i]] = any = true;
                } else {
                    const auto& to = reach_[sym][p];
                    for (std::size_t s = 0; s < to.size(); ++s)
                        if (to[s]) next[s] = any = true;
                }
            }
            if (!any) return next;
            cur = std::move(next);
        }
        return cur;
    }

    const std::vector<Rule>& rules_;
    const Dfa& dfa_;
    std::vector<std::vector<StateSet>> reach_;
};

class BlockAnalyzer {
public:
    BlockAnalyzer(const Grammar& g, const RegularPartition& pi) : pi_(pi) {
        require_choice_structure(g);
        auto report = validate_partition(pi, g.alphabet());
        if (!report.valid) throw GrammarError("invalid partition: " + report.problems.front());

        std::string sigma = g.alphabet() + pi.alphabet() + kEndMarker;
        for (const auto& b : pi.blocks()) dfas_.push_back(rl_to_dfa(b.grammar, sigma));

        trimmed_ = remove_useless(g);
        auto pl = pecfg_to_cfg(trimmed_);
        for (const auto& n : trimmed_.nonterminals()) id(n);
        for (const auto& n : trimmed_.nonterminals()) context(n);
        for (const auto& r : pl.rules) rules_.push_back({id(r.lhs), encode(r.rhs)});

        // RC_X derives every y that can follow X in a proof tree of some w$.
        rules_.push_back({context(pl.start), {terminal_symbol(kEndMarker)}});
        for (const auto& r : pl.rules) {
            auto syms = symbols_of(r.rhs);
            for (std::size_t i = 0; i < syms.size(); ++i) {
                if (!syms[i].is(ExprKind::NonTerminal)) continue;
                std::vector<Symbol> rhs;
                for (std::size_t j = i + 1; j < syms.size(); ++j) rhs.push_back(encode_symbol(syms[j]));
                rhs.push_back(context(r.lhs));
                rules_.push_back({context(syms[i].name()), std::move(rhs)});
            }
        }
    }

    std::vector<std::string> blocks(const Expr& p, const std::string& a) {
        std::vector<std::string> out;
        if (!trimmed_.has(a)) return out;
        std::vector<Expr> alts;
        for (const auto& alt : distribute(p)) {
            bool useful = true;
            for_each_nonterminal(alt, [&](const std::string& n) { useful &= trimmed_.has(n); });
            if (useful) alts.push_back(alt);
        }
        if (alts.empty()) return out;

        auto rules = rules_;
        Symbol root = static_cast<Symbol>(ids_.size());
        for (const auto& alt : alts) {
            auto rhs = encode(alt);
            rhs.push_back(context(a));
            rules.push_back({root, std::move(rhs)});
        }
        std::size_t symbols = static_cast<std::size_t>(root) + 1;
        for (std::size_t i = 0; i < dfas_.size(); ++i)
            if (Intersection(rules, symbols, dfas_[i]).nonempty(root)) out.push_back(pi_.blocks()[i].name);
        return out;
    }

    const Grammar& grammar() const { return trimmed_; }

private:
    Symbol id(const std::string& name) {
        auto [it, fresh] = ids_.try_emplace(name, static_cast<Symbol>(ids_.size()));
        return it->second;
    }
    Symbol context(const std::string& name) { return id("\x01" + name); }

    Symbol encode_symbol(const Expr& s) {
        return s.is(ExprKind::Terminal) ? terminal_symbol(s.symbol()) : id(s.name());
    }
    std::vector<Symbol> encode(const Expr& seq) {
        std::vector<Symbol> out;
        for (const auto& s : symbols_of(seq)) out.push_back(encode_symbol(s));
        return out;
    }

    const RegularPartition& pi_;
    std::vector<Dfa> dfas_;
    Grammar trimmed_{Expr::empty(), {}};
    std::vector<Rule> rules_;
    std::map<std::string, Symbol> ids_;
};

StringSet as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::vector<std::string> block(const Grammar& g, const Expr& p, const std::string& a, const RegularPartition& pi) {
    return BlockAnalyzer(g, pi).blocks(p, a);
}

ClassReport is_ll_regular(const Grammar& g, const RegularPartition& pi) {
    BlockAnalyzer analyzer(g, pi);
    ClassReport report;
    for (const auto& [name, rhs] : analyzer.grammar().productions()) {
        auto walk = [&](auto&& self, const Expr& e) -> void {
            if (!e.is(ExprKind::Choice)) return;
            auto common = set_intersection(as_set(analyzer.blocks(e.left(), name)), as_set(analyzer.blocks(e.right(), name)));
            if (!common.empty())
                report.add({name, render_expression(e.left()), render_expression(e.right()), "BLOCK", common});
            self(self, e.left());
            self(self, e.right());
        };
        walk(walk, rhs);
    }
    return report;
}

}  // namespace pegcfg
