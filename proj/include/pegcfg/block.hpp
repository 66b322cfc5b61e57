#pragma once

#include <string>
#include <vector>

#include "pegcfg/grammar.hpp"
#include "pegcfg/lookahead.hpp"
#include "pegcfg/partition.hpp"

namespace pegcfg {

/// Names of the blocks of `pi`, in partition order, that contain some input
/// w$ on which a proof tree uses `p` as the alternative of `a`: the blocks
/// meeting L(p)·RC(a), where RC(a) is the right-context language of `a`.
///
/// Decided exactly by intersecting a context-free grammar for L(p)·RC(a)
/// with each block automaton. Requires BNF properties 1 and 2 and a valid
/// partition (GrammarError otherwise).
std::vector<std::string> block(const Grammar& g, const Expr& p, const std::string& a, const RegularPartition& pi);

/// BLOCK(p1, A) ∩ BLOCK(p2, A) = ∅ for every choice p1 | p2 of every
/// production A; witnesses are the shared block names.
ClassReport is_ll_regular(const Grammar& g, const RegularPartition& pi);

}  // namespace pegcfg
