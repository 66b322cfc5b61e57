#include "pegcfg/peg_match.hpp"

#include <map>

#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_ops.hpp"

namespace pegcfg {

namespace {

class PegMatcher {
public:
    PegMatcher(const Grammar& g, std::string_view input, Memo memo) : g_(g), input_(input), memo_(memo) {}

    PegMatchResult match(const Expr& e, std::size_t pos) {
        if (memo_ == Memo::Off) return eval(e, pos);
        auto key = std::make_pair(e.id(), pos);
        if (auto it = table_.find(key); it != table_.end()) return it->second;
        auto res = eval(e, pos);
        table_.emplace(key, res);
        return res;
    }

private:
    PegMatchResult eval(const Expr& e, std::size_t pos) {
        switch (e.kind()) {
        case ExprKind::Empty:  // empty.1
            return PegMatchResult::consumed(0);
        case ExprKind::Terminal:  // char.1, char.2, char.3
            if (pos < input_.size() && input_[pos] == e.symbol()) return PegMatchResult::consumed(1);
            return PegMatchResult::fail();
        case ExprKind::NonTerminal:  // var.1
            return match(g_.production(e.name()), pos);
        case ExprKind::Concat: {  // con.1, con.2
            auto l = match(e.left(), pos);
            if (l.failed()) return l;
            auto r = match(e.right(), pos + l.length());
            if (r.failed()) return r;
            return PegMatchResult::consumed(l.length() + r.length());
        }
        case ExprKind::Choice: {  // ord.1, ord.2, ord.3
            auto l = match(e.left(), pos);
            if (l.succeeded()) return l;
            return match(e.right(), pos);
        }
        case ExprKind::Not:  // not.1, not.2
            return match(e.inner(), pos).failed() ? PegMatchResult::consumed(0) : PegMatchResult::fail();
        case ExprKind::Star:
            throw GrammarError("repetition must be desugared before matching");
        }
        return PegMatchResult::fail();
    }

    const Grammar& g_;
    std::string_view input_;
    Memo memo_;
    std::map<std::pair<const void*, std::size_t>, PegMatchResult> table_;
};

}  // namespace

void require_complete(const Grammar& g) {
    if (g.has_repetitions()) throw GrammarError("repetition must be desugared before matching");
    auto lr = left_recursive_nonterminals(g);
    if (lr.empty()) return;
    std::string names;
    for (const auto& n : lr) names += (names.empty() ? "" : ", ") + n;
    throw GrammarError("grammar is left-recursive: {" + names + "}");
}

PegMatchResult peg_match(const Grammar& g, const Expr& p, std::string_view input, Memo memo) {
    require_complete(g);
    if (has_repetition(p)) throw GrammarError("repetition must be desugared before matching");
    return PegMatcher(g, input, memo).match(p, 0);
}

StringSet peg_language(const Grammar& g, const LanguageOptions& opts) {
    require_complete(g);
    const std::string alphabet = enumeration_alphabet(g, opts);
    const std::string markers(opts.markers, kEndMarker);
    auto accepts = [&](const std::string& input, std::size_t want) {
        auto r = PegMatcher(g, input, Memo::On).match(g.start(), 0);
        return r.succeeded() && r.length() == want;
    };
    StringSet out;
    for_each_string(alphabet, opts.max_len, [&](const std::string& x) {
        if (opts.mode == LanguageMode::Exact) {
            if (accepts(x + markers, x.size())) out.insert(x);
            return;
        }
        bool hit = false;
        for_each_string(alphabet, opts.prefix_pad, [&](const std::string& y) {
            if (!hit && accepts(x + y + markers, x.size())) hit = true;
        });
        if (hit) out.insert(x);
    });
    return out;
}

}  // namespace pegcfg
