#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "pegcfg/grammar.hpp"
#include "pegcfg/lookahead.hpp"
#include "pegcfg/partition.hpp"
#include "pegcfg/strings.hpp"

namespace pegcfg {

struct TransformedGrammar {
    Grammar grammar;
    /// Transform name and parameters, e.g. "phi_before k=2".
    std::string provenance;
    /// Number of `$` the harness appends to every input.
    std::size_t marker_arity = 0;
};

/// Grammar text preceded by a `# transform: …` header.
std::string render_transformed(const TransformedGrammar& t);

/// Moves the nullable alternatives of every production after the
/// non-nullable ones, keeping their relative order. Requires a predicate-free
/// grammar with BNF properties 1 and 2.
Grammar reorder_ll1(const Grammar& g);

/// The terminals of `x` in sequence; ε for the empty string.
Expr string_to_expr(std::string_view x);
/// Right-associated choice of the strings, in the set's (short-lex) order;
/// ε for the empty set.
Expr choice_of(const StringSet& strings);

/// Guards each alternative p of A with &choice(FIRST_k(p) •k FOLLOW_k(A)).
/// With `exempt_last` the last alternative of each production stays
/// unguarded. Throws GrammarError unless the grammar is strong-LL(k).
TransformedGrammar phi_before(const Grammar& g, std::size_t k, bool exempt_last = true);

/// Appends &choice(FOLLOW_k(A)) to each alternative of A. Throws GrammarError
/// unless the grammar is strong-LL(k).
TransformedGrammar phi_after(const Grammar& g, std::size_t k, bool exempt_last = false);

/// Marks the end of every string of a right-linear grammar with `$`.
TransformedGrammar pi_prefix(const Grammar& g);

/// Guards each alternative p of A with &choice of the start expressions of
/// the blocks in BLOCK(p, A), then appends every block grammar with its
/// non-terminals renamed to `_<block>_<name>`. Throws GrammarError unless
/// the grammar is LL-regular for `pi`.
TransformedGrammar rho_ll_regular(const Grammar& g, const RegularPartition& pi, bool exempt_last = true);

/// Removes predicates: (!q) r and r (!q) become r, a lone !q becomes ε.
Grammar erase_predicates(const Grammar& g);
Expr erase_predicates(const Expr& e);

}  // namespace pegcfg
