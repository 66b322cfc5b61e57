#pragma once

#include <cstddef>
#include <string>

#include "pegcfg/grammar.hpp"
#include "pegcfg/strings.hpp"

namespace pegcfg {

enum class Verdict { Equal, CfgSuperset, Incomparable };

std::string to_string(Verdict v);

struct DiffReport {
    std::size_t max_len = 0;
    std::size_t markers = 0;
    StringSet only_cfg;
    /// Nonempty only if the PEG side accepts something the CFG side does not,
    /// which for a predicate-free grammar would be a matcher bug.
    StringSet only_peg;
    std::size_t common = 0;
    Verdict verdict = Verdict::Equal;
};

/// Enumerates every x of length ≤ max_len over the terminals of both
/// grammars, appends `markers` end markers, and compares exact acceptance by
/// `peg` under the PEG semantics with exact acceptance by `cfg` under the CFG
/// semantics. Candidates are checked on several threads; the report does not
/// depend on scheduling. Throws GrammarError if `peg` is left-recursive.
DiffReport compare_languages(const Grammar& peg, const Grammar& cfg, std::size_t max_len, std::size_t markers);
/// Both semantics applied to the same grammar.
inline DiffReport compare_languages(const Grammar& g, std::size_t max_len, std::size_t markers) {
    return compare_languages(g, g, max_len, markers);
}

std::string render_text(const DiffReport& r);
/// JSON document with keys max_len, markers, verdict, only_cfg, only_peg,
/// common; string lists are sorted short-lex.
std::string render_json(const DiffReport& r);

}  // namespace pegcfg
