#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pegcfg {

enum class ExprKind { Empty, Terminal, NonTerminal, Concat, Choice, Not, Star };

/// The end-of-input marker. Never part of a user grammar's terminal set.
inline constexpr char kEndMarker = '$';

/// An immutable parsing expression tree.
///
/// Nodes are shared, so copying an Expr is cheap. Equality is structural;
/// `id()` gives the identity of the underlying node, which the matchers use
/// as a memo key.
class Expr {
public:
    /// Defaults to ε.
    Expr();

    static Expr empty();
    static Expr terminal(char symbol);
    static Expr nonterminal(std::string name);
    static Expr concat(Expr left, Expr right);
    static Expr choice(Expr left, Expr right);
    static Expr negation(Expr inner);
    /// `&p`, stored as `!!p`.
    static Expr and_predicate(Expr inner);
    static Expr star(Expr inner);

    /// Right-associated concatenation; ε for an empty list.
    static Expr sequence(std::span<const Expr> items);
    /// Right-associated choice; ε for an empty list.
    static Expr alternatives(std::span<const Expr> items);
    /// Concatenation of the characters of `text` as terminals.
    static Expr literal(std::string_view text);

    ExprKind kind() const noexcept;
    bool is(ExprKind k) const noexcept { return kind() == k; }

    char symbol() const;               // Terminal
    const std::string& name() const;   // NonTerminal
    const Expr& left() const;          // Concat, Choice
    const Expr& right() const;         // Concat, Choice
    const Expr& inner() const;         // Not, Star

    /// True for `!!p`.
    bool is_and_predicate() const noexcept;

    const void* id() const noexcept { return node_.get(); }

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Splits `p1 | (p2 | (... | pn))` along its right spine. A non-choice
/// expression yields a single alternative.
std::vector<Expr> choice_spine(const Expr& e);

/// True if the tree contains a Not node.
bool has_predicate(const Expr& e);
/// True if the tree contains a Star node.
bool has_repetition(const Expr& e);

/// Calls `fn(name)` for every NonTerminal node, in left-to-right order.
template <typename Fn>
void for_each_nonterminal(const Expr& e, Fn&& fn) {
    switch (e.kind()) {
    case ExprKind::NonTerminal:
        fn(e.name());
        break;
    case ExprKind::Concat:
    case ExprKind::Choice:
        for_each_nonterminal(e.left(), fn);
        for_each_nonterminal(e.right(), fn);
        break;
    case ExprKind::Not:
    case ExprKind::Star:
        for_each_nonterminal(e.inner(), fn);
        break;
    default:
        break;
    }
}

template <typename Fn>
void for_each_terminal(const Expr& e, Fn&& fn) {
    switch (e.kind()) {
    case ExprKind::Terminal:
        fn(e.symbol());
        break;
    case ExprKind::Concat:
    case ExprKind::Choice:
        for_each_terminal(e.left(), fn);
        for_each_terminal(e.right(), fn);
        break;
    case ExprKind::Not:
    case ExprKind::Star:
        for_each_terminal(e.inner(), fn);
        break;
    default:
        break;
    }
}

}  // namespace pegcfg
