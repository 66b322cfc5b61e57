#include "pegcfg/expr.hpp"

#include "pegcfg/errors.hpp"

namespace pegcfg {

struct Expr::Node {
    ExprKind kind = ExprKind::Empty;
    char symbol = 0;
    std::string name;
    std::vector<Expr> children;
};

Expr::Expr() : Expr(empty()) {}

Expr Expr::empty() {
    static const auto node = std::make_shared<const Node>();
    return Expr(node);
}

Expr Expr::terminal(char symbol) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Terminal;
    n->symbol = symbol;
    return Expr(std::move(n));
}

Expr Expr::nonterminal(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::NonTerminal;
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::concat(Expr left, Expr right) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Concat;
    n->children = {std::move(left), std::move(right)};
    return Expr(std::move(n));
}

Expr Expr::choice(Expr left, Expr right) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Choice;
    n->children = {std::move(left), std::move(right)};
    return Expr(std::move(n));
}

Expr Expr::negation(Expr inner) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Not;
    n->children = {std::move(inner)};
    return Expr(std::move(n));
}

Expr Expr::and_predicate(Expr inner) { return negation(negation(std::move(inner))); }

Expr Expr::star(Expr inner) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Star;
    n->children = {std::move(inner)};
    return Expr(std::move(n));
}

Expr Expr::sequence(std::span<const Expr> items) {
    if (items.empty()) return empty();
    Expr acc = items.back();
    for (auto it = items.rbegin() + 1; it != items.rend(); ++it) acc = concat(*it, acc);
    return acc;
}

Expr Expr::alternatives(std::span<const Expr> items) {
    if (items.empty()) return empty();
    Expr acc = items.back();
    for (auto it = items.rbegin() + 1; it != items.rend(); ++it) acc = choice(*it, acc);
    return acc;
}

Expr Expr::literal(std::string_view text) {
    std::vector<Expr> items;
    items.reserve(text.size());
    for (char c : text) items.push_back(terminal(c));
    return sequence(items);
}

ExprKind Expr::kind() const noexcept { return node_->kind; }

char Expr::symbol() const {
    if (kind() != ExprKind::Terminal) throw Error("Expr::symbol on a non-terminal node");
    return node_->symbol;
}

const std::string& Expr::name() const {
    if (kind() != ExprKind::NonTerminal) throw Error("Expr::name on a node that is not a non-terminal");
    return node_->name;
}

const Expr& Expr::left() const {
    if (kind() != ExprKind::Concat && kind() != ExprKind::Choice) throw Error("Expr::left on a non-binary node");
    return node_->children[0];
}

const Expr& Expr::right() const {
    if (kind() != ExprKind::Concat && kind() != ExprKind::Choice) throw Error("Expr::right on a non-binary node");
    return node_->children[1];
}

const Expr& Expr::inner() const {
    if (kind() != ExprKind::Not && kind() != ExprKind::Star) throw Error("Expr::inner on a non-unary node");
    return node_->children[0];
}

bool Expr::is_and_predicate() const noexcept {
    return kind() == ExprKind::Not && node_->children[0].kind() == ExprKind::Not;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case ExprKind::Empty:
        return true;
    case ExprKind::Terminal:
        return a.node_->symbol == b.node_->symbol;
    case ExprKind::NonTerminal:
        return a.node_->name == b.node_->name;
    default:
        break;
    }
    const auto& ca = a.node_->children;
    const auto& cb = b.node_->children;
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!(ca[i] == cb[i])) return false;
    return true;
}

std::vector<Expr> choice_spine(const Expr& e) {
    std::vector<Expr> out;
    const Expr* cur = &e;
    while (cur->is(ExprKind::Choice)) {
        out.push_back(cur->left());
        cur = &cur->right();
    }
    out.push_back(*cur);
    return out;
}

bool has_predicate(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::Not:
        return true;
    case ExprKind::Concat:
    case ExprKind::Choice:
        return has_predicate(e.left()) || has_predicate(e.right());
    case ExprKind::Star:
        return has_predicate(e.inner());
    default:
        return false;
    }
}

bool has_repetition(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::Star:
        return true;
    case ExprKind::Concat:
    case ExprKind::Choice:
        return has_repetition(e.left()) || has_repetition(e.right());
    case ExprKind::Not:
        return has_repetition(e.inner());
    default:
        return false;
    }
}

}  // namespace pegcfg
