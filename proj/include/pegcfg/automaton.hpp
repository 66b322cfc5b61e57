#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pegcfg/grammar.hpp"

namespace pegcfg {

/// A total deterministic automaton. Characters outside `alphabet` are
/// rejected.
struct Dfa {
    std::string alphabet;  // sorted, distinct
    std::vector<std::vector<std::size_t>> delta;  // state × symbol index
    std::vector<bool> accepting;
    std::size_t start = 0;

    std::size_t size() const { return accepting.size(); }
    /// npos for characters outside the alphabet.
    std::size_t symbol_index(char c) const;
    bool accepts(std::string_view w) const;
    /// States from which an accepting state is reachable.
    std::vector<bool> live() const;
    std::vector<bool> reachable() const;
};

/// ε, a and A are right-linear; p1 p2 is right-linear iff p1 is a terminal
/// and p2 is right-linear; a choice iff both branches are.
bool is_right_linear(const Expr& e);
/// The start expression and every production are right-linear.
bool is_right_linear(const Grammar& g);

/// Subset construction over the standard NFA encoding of a right-linear
/// grammar. The alphabet is the grammar's terminals (including `$`) plus
/// `extra`. Throws GrammarError for a grammar that is not right-linear.
Dfa rl_to_dfa(const Grammar& g, std::string_view extra = {});

/// No string of the language is a proper prefix of another.
bool prefix_property(const Grammar& g);

}  // namespace pegcfg
