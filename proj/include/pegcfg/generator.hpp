#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "pegcfg/grammar.hpp"

namespace pegcfg {

enum class GrammarClass {
    Any,
    /// Not left-recursive, so usable with the PEG matcher.
    Complete,
    Ll1,
    StrongLlk,
    RightLinear,
};

struct GeneratorConfig {
    std::uint64_t seed = 1;
    std::size_t max_nonterminals = 3;
    std::size_t max_alternatives = 3;
    std::size_t max_alt_length = 3;
    std::string terminals = "abc";
    GrammarClass constraint = GrammarClass::Any;
    /// Lookahead for GrammarClass::StrongLlk.
    std::size_t k = 2;
    /// Reject grammars without any choice, which decide nothing.
    bool require_choice = true;
    std::size_t max_attempts = 20000;
};

/// A random grammar without useless symbols, in BNF-like form (start is a
/// single non-terminal, productions are choices of symbol sequences), drawn
/// by rejection sampling until it satisfies `constraint`. Deterministic per
/// configuration. Throws Error when the attempt cap is exhausted.
Grammar random_grammar(const GeneratorConfig& cfg);

}  // namespace pegcfg
