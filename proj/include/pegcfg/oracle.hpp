#pragma once

#include <string_view>

#include "pegcfg/grammar.hpp"

namespace pegcfg {

/// Exact membership of `x` in the language generated by `g`, decided by a
/// breadth-first search over leftmost derivations. Shares no code with the
/// matchers: it works on the traditional production view, after removing
/// ε-productions, and prunes sentential forms whose terminal prefix disagrees
/// with x or whose shortest yield is longer than what is left of x.
///
/// Requires a predicate-free, repetition-free grammar.
bool oracle_membership(const Grammar& g, std::string_view x);

}  // namespace pegcfg
