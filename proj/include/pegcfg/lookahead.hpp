#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pegcfg/grammar.hpp"
#include "pegcfg/grammar_ops.hpp"
#include "pegcfg/strings.hpp"

namespace pegcfg {

inline constexpr std::size_t kDefaultMaxLookahead = 4;

/// nullable, FIRST_k and FOLLOW_k of a grammar. k = 1 gives the classical
/// FIRST/FOLLOW sets, with `$` standing for the end of input.
class LookaheadTables {
public:
    LookaheadTables(Grammar trimmed, std::size_t k, NameSet nullable, std::map<std::string, StringSet, std::less<>> first,
                    std::map<std::string, StringSet, std::less<>> follow)
        : grammar_(std::move(trimmed)),
          k_(k),
          nullable_(std::move(nullable)),
          first_(std::move(first)),
          follow_(std::move(follow)) {}

    std::size_t k() const noexcept { return k_; }
    /// The grammar the tables describe: the input with useless symbols removed.
    const Grammar& grammar() const noexcept { return grammar_; }

    bool nullable(std::string_view nonterminal) const { return nullable_.contains(nonterminal); }
    const NameSet& nullable_set() const noexcept { return nullable_; }
    /// FIRST_k of any expression over the grammar's non-terminals.
    StringSet first(const Expr& e) const;
    /// Empty for non-terminals that were removed as useless.
    const StringSet& first(std::string_view nonterminal) const;
    const StringSet& follow(std::string_view nonterminal) const;

private:
    Grammar grammar_;
    std::size_t k_;
    NameSet nullable_;
    std::map<std::string, StringSet, std::less<>> first_;
    std::map<std::string, StringSet, std::less<>> follow_;
};

/// Least fixed points of nullable, FIRST_k and FOLLOW_k. FOLLOW_k is seeded
/// with `$^k` at the start expression, so every FOLLOW_k string has length k.
/// Throws GrammarError for predicates, repetitions, k = 0 or k > max_k.
LookaheadTables compute_tables(const Grammar& g, std::size_t k, std::size_t max_k = kDefaultMaxLookahead);

struct ClassViolation {
    std::string nonterminal;
    std::string alternative;  // left branch of the offending choice
    std::string rest;         // right branch
    std::string rule;
    StringSet witnesses;

    friend bool operator==(const ClassViolation&, const ClassViolation&) = default;
};

struct ClassReport {
    bool holds = true;
    std::vector<ClassViolation> violations;

    void add(ClassViolation v) {
        holds = false;
        violations.push_back(std::move(v));
    }
};

/// The LL(1) restrictions on every choice p1 | p2: FIRST(p1) and FIRST(p2)
/// are disjoint, and if either branch is nullable the FIRST set of the other
/// is disjoint from FOLLOW(A). Requires BNF properties 1 and 2; the check does
/// not depend on the order of the alternatives.
ClassReport is_ll1(const Grammar& g);

/// (FIRST_k(p1) •k FOLLOW_k(A)) ∩ (FIRST_k(p2) •k FOLLOW_k(A)) = ∅ for every
/// choice p1 | p2 of every production A. Requires BNF properties 1 and 2.
ClassReport is_strong_llk(const Grammar& g, std::size_t k, std::size_t max_k = kDefaultMaxLookahead);

/// Throws GrammarError unless `g` is predicate-free, repetition-free and
/// satisfies BNF properties 1 and 2.
void require_choice_structure(const Grammar& g);

/// One line per violation.
std::string describe(const ClassReport& r);

}  // namespace pegcfg
