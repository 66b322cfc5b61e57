#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pegcfg/cfg_match.hpp"
#include "pegcfg/grammar.hpp"
#include "pegcfg/strings.hpp"

namespace pegcfg {

/// Outcome of the deterministic (PEG) semantics: failure, or the length of
/// the consumed prefix.
class PegMatchResult {
public:
    static PegMatchResult fail() { return PegMatchResult(); }
    static PegMatchResult consumed(std::size_t n) { return PegMatchResult(n); }

    bool failed() const noexcept { return !length_; }
    bool succeeded() const noexcept { return length_.has_value(); }
    /// Requires succeeded().
    std::size_t length() const { return *length_; }

    std::string to_string() const { return failed() ? "fail" : "consumed " + std::to_string(*length_); }

    friend bool operator==(const PegMatchResult&, const PegMatchResult&) = default;

private:
    PegMatchResult() = default;
    explicit PegMatchResult(std::size_t n) : length_(n) {}
    std::optional<std::size_t> length_;
};

enum class Memo { Off, On };

/// Matches `p` against `input` with ordered choice, explicit failure, and the
/// not-predicate. Throws GrammarError if the grammar is left-recursive (the
/// match might not terminate) or still contains repetitions.
PegMatchResult peg_match(const Grammar& g, const Expr& p, std::string_view input, Memo memo = Memo::Off);
inline PegMatchResult peg_match(const Grammar& g, std::string_view input, Memo memo = Memo::Off) {
    return peg_match(g, g.start(), input, memo);
}

/// Throws GrammarError naming the left-recursive non-terminals, if any.
void require_complete(const Grammar& g);

/// Strings accepted under the PEG semantics; see LanguageOptions. Prefix mode
/// only tries continuations up to `prefix_pad` symbols, so it
/// under-approximates the prefix language.
StringSet peg_language(const Grammar& g, const LanguageOptions& opts);
inline StringSet peg_language(const Grammar& g, std::size_t max_len, LanguageMode mode = LanguageMode::Exact) {
    LanguageOptions opts;
    opts.max_len = max_len;
    opts.mode = mode;
    return peg_language(g, opts);
}

}  // namespace pegcfg
