#include "pegcfg/generator.hpp"

#include <random>

#include "pegcfg/automaton.hpp"
#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_ops.hpp"
#include "pegcfg/lookahead.hpp"

namespace pegcfg {

namespace {

std::string nonterminal_name(std::size_t i) {
    static const std::string letters = "SABCDEFGHIJKLMNOPQRTUVWXYZ";
    if (i < letters.size()) return std::string(1, letters[i]);
    return "N" + std::to_string(i);
}

class Sampler {
public:
    Sampler(const GeneratorConfig& cfg, std::mt19937_64& rng) : cfg_(cfg), rng_(rng) {}

    ProductionList draw() {
        std::size_t n = pick(1, cfg_.max_nonterminals);
        ProductionList pl;
        pl.start = nonterminal_name(0);
        for (std::size_t a = 0; a < n; ++a) {
            std::size_t alts = pick(1, cfg_.max_alternatives);
            for (std::size_t j = 0; j < alts; ++j) pl.rules.push_back({nonterminal_name(a), alternative(n)});
        }
        return pl;
    }

private:
    std::size_t pick(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

    Expr terminal() { return Expr::terminal(cfg_.terminals[pick(0, cfg_.terminals.size() - 1)]); }
    Expr nonterminal(std::size_t n) { return Expr::nonterminal(nonterminal_name(pick(0, n - 1))); }

    Expr alternative(std::size_t n) {
        std::size_t len = pick(0, cfg_.max_alt_length);
        std::vector<Expr> syms;
        if (cfg_.constraint == GrammarClass::RightLinear) {
            bool tail = len > 0 && pick(0, 1) == 1;
            for (std::size_t i = 0; i + (tail ? 1 : 0) < len; ++i) syms.push_back(terminal());
            if (tail) syms.push_back(nonterminal(n));
            return Expr::sequence(syms);
        }
        for (std::size_t i = 0; i < len; ++i) syms.push_back(pick(0, 9) < 6 ? terminal() : nonterminal(n));
        return Expr::sequence(syms);
    }

    const GeneratorConfig& cfg_;
    std::mt19937_64& rng_;
};

bool has_choice(const Grammar& g) {
    for (const auto& [name, rhs] : g.productions())
        if (rhs.is(ExprKind::Choice)) return true;
    return false;
}

bool satisfies(const Grammar& g, const GeneratorConfig& cfg) {
    if (cfg.require_choice && !has_choice(g)) return false;
    switch (cfg.constraint) {
    case GrammarClass::Any:
        return true;
    case GrammarClass::Complete:
        return left_recursive_nonterminals(g).empty();
    case GrammarClass::Ll1:
        return left_recursive_nonterminals(g).empty() && is_ll1(g).holds;
    case GrammarClass::StrongLlk:
        return left_recursive_nonterminals(g).empty() && is_strong_llk(g, cfg.k).holds;
    case GrammarClass::RightLinear:
        return is_right_linear(g);
    }
    return false;
}

}  // namespace

Grammar random_grammar(const GeneratorConfig& cfg) {
    if (cfg.terminals.empty()) throw Error("generator needs at least one terminal");
    if (cfg.max_nonterminals == 0 || cfg.max_alternatives == 0) throw Error("generator limits must be positive");
    std::mt19937_64 rng(cfg.seed);
    Sampler sampler(cfg, rng);
    for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        auto pl = sampler.draw();
        try {
            Grammar g = remove_useless(cfg_to_pecfg(pl));
            if (satisfies(g, cfg)) return g;
        } catch (const GrammarError&) {
            // empty language; draw again
        }
    }
    throw Error("random grammar: attempt cap of " + std::to_string(cfg.max_attempts) + " exhausted");
}

}  // namespace pegcfg
