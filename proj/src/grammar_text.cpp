#include "pegcfg/grammar_text.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "pegcfg/errors.hpp"

namespace pegcfg {

namespace {

enum class Tok { Ident, Terminal, Eps, Arrow, Bar, Bang, Amp, Star, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    char symbol = 0;
    std::size_t column = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineLexer {
public:
    LineLexer(std::string_view line, std::size_t line_no, bool allow_marker)
        : line_(line), line_no_(line_no), allow_marker_(allow_marker) {}

    std::vector<Token> tokens() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            std::size_t col = pos_ + 1;
            if (pos_ >= line_.size() || line_[pos_] == '#') {
                out.push_back({Tok::End, "", 0, col});
                return out;
            }
            char c = line_[pos_];
            if (ident_start(c)) {
                std::size_t b = pos_;
                while (pos_ < line_.size() && ident_char(line_[pos_])) ++pos_;
                std::string word(line_.substr(b, pos_ - b));
                out.push_back({word == "eps" ? Tok::Eps : Tok::Ident, word, 0, col});
                continue;
            }
            if (c == '\'') {
                out.push_back(terminal(col));
                continue;
            }
            if (c == '-' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
                pos_ += 2;
                out.push_back({Tok::Arrow, "->", 0, col});
                continue;
            }
            ++pos_;
            switch (c) {
            case '|': out.push_back({Tok::Bar, "|", 0, col}); break;
            case '!': out.push_back({Tok::Bang, "!", 0, col}); break;
            case '&': out.push_back({Tok::Amp, "&", 0, col}); break;
            case '*': out.push_back({Tok::Star, "*", 0, col}); break;
            case '(': out.push_back({Tok::LParen, "(", 0, col}); break;
            case ')': out.push_back({Tok::RParen, ")", 0, col}); break;
            default:
                throw SyntaxError(line_no_, col, std::string("unexpected character '") + c + "'");
            }
        }
    }

private:
    void skip_space() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    }

    Token terminal(std::size_t col) {
        ++pos_;  // opening quote
        if (pos_ >= line_.size()) throw SyntaxError(line_no_, col, "unterminated terminal");
        char c = line_[pos_++];
        if (c == '\'') throw SyntaxError(line_no_, col, "empty terminal; use eps");
        if (c == '\\') {
            if (pos_ >= line_.size()) throw SyntaxError(line_no_, col, "unterminated escape");
            char e = line_[pos_++];
            switch (e) {
            case 'n': c = '\n'; break;
            case 't': c = '\t'; break;
            case '\\':
            case '\'': c = e; break;
            default: throw SyntaxError(line_no_, col, std::string("unknown escape \\") + e);
            }
        }
        if (pos_ >= line_.size() || line_[pos_] != '\'')
            throw SyntaxError(line_no_, col, "terminals are single characters");
        ++pos_;
        if (c == kEndMarker && !allow_marker_)
            throw SyntaxError(line_no_, col, "'$' is reserved as the end-of-input marker");
        return {Tok::Terminal, std::string(1, c), c, col};
    }

    std::string_view line_;
    std::size_t line_no_;
    bool allow_marker_;
    std::size_t pos_ = 0;
};

class ExprParser {
public:
    ExprParser(std::vector<Token> toks, std::size_t line_no) : toks_(std::move(toks)), line_no_(line_no) {}

    Expr parse_all() {
        Expr e = choice();
        if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw SyntaxError(line_no_, t.column, msg); }

    Expr choice() {
        Expr left = sequence();
        if (peek().kind == Tok::Bar) {
            next();
            return Expr::choice(left, choice());
        }
        return left;
    }

    static bool starts_item(Tok k) {
        return k == Tok::Ident || k == Tok::Terminal || k == Tok::Eps || k == Tok::Bang || k == Tok::Amp ||
               k == Tok::LParen;
    }

    Expr sequence() {
        std::vector<Expr> items;
        while (starts_item(peek().kind)) items.push_back(prefix());
        if (items.empty()) fail(peek(), "expected an expression");
        return Expr::sequence(items);
    }

    Expr prefix() {
        if (peek().kind == Tok::Bang) {
            next();
            return Expr::negation(prefix());
        }
        if (peek().kind == Tok::Amp) {
            next();
            return Expr::and_predicate(prefix());
        }
        Expr e = primary();
        while (peek().kind == Tok::Star) {
            next();
            e = Expr::star(e);
        }
        return e;
    }

    Expr primary() {
        const Token& t = next();
        switch (t.kind) {
        case Tok::Terminal: return Expr::terminal(t.symbol);
        case Tok::Eps: return Expr::empty();
        case Tok::Ident: return Expr::nonterminal(t.text);
        case Tok::LParen: {
            Expr e = choice();
            if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
            next();
            return e;
        }
        default: fail(t, t.kind == Tok::End ? "unexpected end of line" : "unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t b = 0;
    while (b <= text.size()) {
        auto e = text.find('\n', b);
        if (e == std::string_view::npos) e = text.size();
        auto line = text.substr(b, e - b);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        b = e + 1;
    }
    return lines;
}

bool blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool is_provenance_header(std::string_view line) {
    auto p = line.find_first_not_of(" \t");
    return p != std::string_view::npos && line.substr(p).starts_with("# transform:");
}

}  // namespace

Grammar parse_grammar(std::string_view text, const ParseOptions& options) {
    auto lines = split_lines(text);
    bool allow_marker = options.allow_marker;
    for (auto line : lines) {
        if (blank_or_comment(line) && !is_provenance_header(line)) continue;
        if (is_provenance_header(line)) allow_marker = true;
        break;
    }

    std::optional<Expr> start;
    std::vector<Grammar::Production> prods;
    std::set<std::string, std::less<>> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::size_t line_no = options.first_line + i;
        if (blank_or_comment(lines[i])) continue;
        if (!start) {
            auto line = lines[i];
            auto b = line.find_first_not_of(" \t");
            auto rest = line.substr(b);
            auto after = rest.substr(std::min<std::size_t>(5, rest.size()));
            auto colon = after.find_first_not_of(" \t");
            if (!rest.starts_with("start") || colon == std::string_view::npos || after[colon] != ':')
                throw SyntaxError(line_no, b + 1, "expected 'start:' line");
            // Blank out everything up to the colon so columns stay accurate.
            std::string padded(line);
            std::size_t body = b + 5 + colon + 1;
            for (std::size_t j = 0; j < body; ++j) padded[j] = ' ';
            start = ExprParser(LineLexer(padded, line_no, allow_marker).tokens(), line_no).parse_all();
            continue;
        }
        auto toks = LineLexer(lines[i], line_no, allow_marker).tokens();
        if (toks.size() < 3 || toks[0].kind != Tok::Ident || toks[1].kind != Tok::Arrow)
            throw SyntaxError(line_no, toks[0].column, "expected 'Name -> expression'");
        const std::string& name = toks[0].text;
        if (!seen.insert(name).second)
            throw SyntaxError(line_no, toks[0].column, "duplicate production for non-terminal " + name);
        std::vector<Token> rest(toks.begin() + 2, toks.end());
        prods.emplace_back(name, ExprParser(std::move(rest), line_no).parse_all());
    }
    if (!start) throw SyntaxError(options.first_line, 1, "missing 'start:' line");
    return Grammar(*start, std::move(prods));
}

Expr parse_expression(std::string_view text, bool allow_marker) {
    return ExprParser(LineLexer(text, 1, allow_marker).tokens(), 1).parse_all();
}

namespace {

// Binding strength of each construct; a child rendered in a context that
// binds tighter than the child gets parenthesized.
enum Level { kChoice = 0, kConcat = 1, kPrefix = 2, kPostfix = 3 };

std::string terminal_text(char c) {
    switch (c) {
    case '\'': return "'\\''";
    case '\\': return "'\\\\'";
    case '\n': return "'\\n'";
    case '\t': return "'\\t'";
    default: return std::string("'") + c + "'";
    }
}

std::string render(const Expr& e, int ctx) {
    auto wrap = [ctx](std::string s, int level) { return ctx > level ? "(" + s + ")" : s; };
    switch (e.kind()) {
    case ExprKind::Empty: return "eps";
    case ExprKind::Terminal: return terminal_text(e.symbol());
    case ExprKind::NonTerminal: return e.name();
    case ExprKind::Choice: return wrap(render(e.left(), kConcat) + " | " + render(e.right(), kChoice), kChoice);
    case ExprKind::Concat: return wrap(render(e.left(), kPrefix) + " " + render(e.right(), kConcat), kConcat);
    case ExprKind::Not:
        if (e.is_and_predicate()) return wrap("&(" + render(e.inner().inner(), kChoice) + ")", kPrefix);
        return wrap("!(" + render(e.inner(), kChoice) + ")", kPrefix);
    case ExprKind::Star: return render(e.inner(), kPostfix + 1) + "*";
    }
    return {};
}

}  // namespace

std::string render_expression(const Expr& e) { return render(e, kChoice); }

std::string render_grammar(const Grammar& g) {
    std::string out = "start: " + render_expression(g.start()) + "\n";
    for (const auto& [name, e] : g.productions()) out += name + " -> " + render_expression(e) + "\n";
    return out;
}

}  // namespace pegcfg
