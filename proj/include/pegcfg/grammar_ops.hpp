#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pegcfg/grammar.hpp"

namespace pegcfg {

using NameSet = std::set<std::string, std::less<>>;

/// Replaces every distinct `p*` with a fresh non-terminal `_Rn -> p _Rn | eps`.
/// Fresh names are numbered in first-occurrence order (start expression
/// first, then productions in declaration order) and skip names already in V.
Grammar desugar(const Grammar& g);

/// Combines the rules of each non-terminal, in list order, into a
/// right-associated choice. The start expression is the start non-terminal.
Grammar cfg_to_pecfg(const ProductionList& pl);

/// Distributes concatenation over choice until every production is a list of
/// choice-free alternatives; duplicate alternatives of one non-terminal are
/// collapsed. Requires a predicate-free, repetition-free grammar whose start
/// expression is a single non-terminal.
ProductionList pecfg_to_cfg(const Grammar& g);

/// Flattens a predicate-free expression into choice-free alternatives, in
/// order and without removing duplicates.
std::vector<Expr> distribute(const Expr& e);

/// Non-terminals that can match the empty string under the CFG reading.
/// Not-predicates count as nullable (they never consume input).
NameSet nullable_nonterminals(const Grammar& g);
bool is_nullable(const Expr& e, const NameSet& nullable);

struct BnfLocation {
    std::string nonterminal;  // empty for the start expression
    std::string expression;   // rendered offending subexpression

    friend bool operator==(const BnfLocation&, const BnfLocation&) = default;
};

struct BnfReport {
    std::vector<BnfLocation> property1_violations;  // choice under concatenation
    bool property2_ok = true;                        // start is one non-terminal
    std::vector<BnfLocation> property3_violations;  // nullable left, non-nullable right

    bool has_bnf_structure() const {
        return property1_violations.empty() && property2_ok && property3_violations.empty();
    }
    /// Properties 1 and 2 only.
    bool has_choice_structure() const { return property1_violations.empty() && property2_ok; }
};

BnfReport check_bnf(const Grammar& g);

/// Establishes BNF properties 1 and 2: productions with a choice under a
/// concatenation are distributed into flat alternatives, and a non-symbol
/// start expression moves into a fresh start non-terminal. Productions that
/// already comply are left untouched.
Grammar normalize_bnf(const Grammar& g);

/// Non-terminals from which a left-recursive cycle is reachable through
/// leftmost positions.
NameSet left_recursive_nonterminals(const Grammar& g);

/// Drops non-productive and unreachable non-terminals together with the
/// alternatives that mention non-productive ones. Throws GrammarError
/// ("empty language") if the start expression itself is non-productive.
Grammar remove_useless(const Grammar& g);

}  // namespace pegcfg
