#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string_view>

#include "pegcfg/grammar.hpp"
#include "pegcfg/strings.hpp"

namespace pegcfg {

/// Consumed-prefix lengths reachable from the start of the input.
using CfgMatchResult = std::set<std::size_t>;

/// All ℓ such that G[p] matches input[0, ℓ) under the non-deterministic
/// (CFG) semantics.
///
/// Computed as the least fixed point over (node, position) pairs, so
/// left-recursive grammars are fine. Throws GrammarError if p or the grammar
/// contains a predicate or an undesugared repetition.
CfgMatchResult cfg_match(const Grammar& g, const Expr& p, std::string_view input);
inline CfgMatchResult cfg_match(const Grammar& g, std::string_view input) { return cfg_match(g, g.start(), input); }

enum class LanguageMode { Exact, Prefix };

struct LanguageOptions {
    std::size_t max_len = 4;
    LanguageMode mode = LanguageMode::Exact;
    /// Number of end markers appended to every candidate; a candidate x is
    /// accepted when the match consumes exactly x and leaves the markers.
    std::size_t markers = 0;
    /// Prefix mode: longest continuation tried after the candidate.
    std::size_t prefix_pad = 3;
    /// Candidate alphabet; defaults to the grammar's terminals (without `$`
    /// when markers are appended).
    std::string alphabet;
    bool alphabet_given = false;
};

/// Strings over the grammar's terminals, up to max_len, accepted under the
/// CFG semantics.
StringSet cfg_language(const Grammar& g, const LanguageOptions& opts);
inline StringSet cfg_language(const Grammar& g, std::size_t max_len, LanguageMode mode = LanguageMode::Exact) {
    LanguageOptions opts;
    opts.max_len = max_len;
    opts.mode = mode;
    return cfg_language(g, opts);
}

enum class CountStatus { Exact, Capped, Divergent };

struct ProofTreeCount {
    /// Consumed length → number of distinct proof trees (saturated at the cap).
    std::map<std::size_t, std::uint64_t> per_suffix;
    /// Consumed lengths with infinitely many proof trees.
    std::set<std::size_t> divergent;
    std::uint64_t total = 0;
    CountStatus status = CountStatus::Exact;

    bool ambiguous() const;
};

/// Counts the proof trees of the start expression on `input`, per consumed
/// length.
ProofTreeCount count_proof_trees(const Grammar& g, std::string_view input, std::uint64_t cap = 1'000'000);

/// Candidate alphabet used by the language enumerators.
std::string enumeration_alphabet(const Grammar& g, const LanguageOptions& opts);

}  // namespace pegcfg
