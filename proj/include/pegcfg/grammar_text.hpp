#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "pegcfg/grammar.hpp"

namespace pegcfg {

struct ParseOptions {
    /// Accept the end marker `$` as a terminal. Sources whose first line is a
    /// `# transform:` provenance comment always accept it.
    bool allow_marker = false;
    /// Line number reported for the first line of `text`.
    std::size_t first_line = 1;
};

/// Reads the textual grammar format:
///
///     # comment
///     start: S
///     S -> A 'b' | eps
///     A -> !'b' 'a' A*
///
/// Choice is right-associative and binds loosest, juxtaposition is
/// right-associative concatenation, `!` and `&` are prefix predicates (`&p`
/// becomes `!!p`), `*` is postfix repetition.
Grammar parse_grammar(std::string_view text, const ParseOptions& options = {});

/// Parses a single expression in the same syntax; non-terminals are not
/// checked against any grammar.
Expr parse_expression(std::string_view text, bool allow_marker = true);

std::string render_expression(const Expr& e);
/// Renders `start:` followed by one production per line, in declaration
/// order, with a trailing newline.
std::string render_grammar(const Grammar& g);

}  // namespace pegcfg
