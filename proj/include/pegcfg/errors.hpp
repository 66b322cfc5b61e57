#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pegcfg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed grammar source text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A grammar violates a structural invariant or an operation's precondition.
class GrammarError : public Error {
public:
    using Error::Error;
};

}  // namespace pegcfg
