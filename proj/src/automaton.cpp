#include "pegcfg/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pegcfg/errors.hpp"

namespace pegcfg {

std::size_t Dfa::symbol_index(char c) const {
    auto pos = alphabet.find(c);
    return pos == std::string::npos ? std::string::npos : pos;
}

bool Dfa::accepts(std::string_view w) const {
    std::size_t q = start;
    for (char c : w) {
        auto s = symbol_index(c);
        if (s == std::string::npos) return false;
        q = delta[q][s];
    }
    return accepting[q];
}

std::vector<bool> Dfa::reachable() const {
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> work{start};
    seen[start] = true;
    while (!work.empty()) {
        auto q = work.back();
        work.pop_back();
        for (auto r : delta[q]) {
            if (seen[r]) continue;
            seen[r] = true;
            work.push_back(r);
        }
    }
    return seen;
}

std::vector<bool> Dfa::live() const {
    std::vector<bool> out = accepting;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t q = 0; q < size(); ++q) {
            if (out[q]) continue;
            if (std::any_of(delta[q].begin(), delta[q].end(), [&](std::size_t r) { return out[r]; }))
                out[q] = changed = true;
        }
    }
    return out;
}

bool is_right_linear(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::Empty:
    case ExprKind::Terminal:
    case ExprKind::NonTerminal:
        return true;
    case ExprKind::Concat:
        return e.left().is(ExprKind::Terminal) && is_right_linear(e.right());
    case ExprKind::Choice:
        return is_right_linear(e.left()) && is_right_linear(e.right());
    default:
        return false;
    }
}

bool is_right_linear(const Grammar& g) {
    if (!is_right_linear(g.start())) return false;
    return std::all_of(g.productions().begin(), g.productions().end(),
                       [](const auto& p) { return is_right_linear(p.second); });
}

namespace {

struct Nfa {
    static constexpr std::size_t kAccept = 0;

    std::vector<std::vector<std::size_t>> lambda;
    std::vector<std::vector<std::pair<char, std::size_t>>> edges;

    std::size_t add_state() {
        lambda.emplace_back();
        edges.emplace_back();
        return lambda.size() - 1;
    }

    std::set<std::size_t> closure(std::set<std::size_t> states) const {
        std::vector<std::size_t> work(states.begin(), states.end());
        while (!work.empty()) {
            auto q = work.back();
            work.pop_back();
            for (auto r : lambda[q])
                if (states.insert(r).second) work.push_back(r);
        }
        return states;
    }
};

/// Every non-terminal owns one state; the expression following it is read
/// from that state towards the single accepting state.
class NfaBuilder {
public:
    explicit NfaBuilder(const Grammar& g) : g_(g) { nfa_.add_state(); }

    Nfa build(std::size_t& initial) {
        initial = nfa_.add_state();
        emit(g_.start(), initial);
        return std::move(nfa_);
    }

private:
    std::size_t state_of(const std::string& name) {
        if (auto it = states_.find(name); it != states_.end()) return it->second;
        auto q = nfa_.add_state();
        states_.emplace(name, q);
        emit(g_.production(name), q);
        return q;
    }

    void emit(const Expr& e, std::size_t from) {
        switch (e.kind()) {
        case ExprKind::Empty:
            nfa_.lambda[from].push_back(Nfa::kAccept);
            break;
        case ExprKind::Terminal:
            nfa_.edges[from].emplace_back(e.symbol(), Nfa::kAccept);
            break;
        case ExprKind::NonTerminal: {
            auto q = state_of(e.name());
            nfa_.lambda[from].push_back(q);
            break;
        }
        case ExprKind::Concat: {
            auto mid = nfa_.add_state();
            nfa_.edges[from].emplace_back(e.left().symbol(), mid);
            emit(e.right(), mid);
            break;
        }
        case ExprKind::Choice:
            emit(e.left(), from);
            emit(e.right(), from);
            break;
        default:
            break;
        }
    }

    const Grammar& g_;
    Nfa nfa_;
    std::map<std::string, std::size_t> states_;
};

}  // namespace

Dfa rl_to_dfa(const Grammar& g, std::string_view extra) {
    if (!is_right_linear(g)) throw GrammarError("grammar is not right-linear");
    std::size_t initial = 0;
    Nfa nfa = NfaBuilder(g).build(initial);

    Dfa dfa;
    for (char c : g.terminals()) dfa.alphabet.push_back(c);
    dfa.alphabet.append(extra);
    std::sort(dfa.alphabet.begin(), dfa.alphabet.end());
    dfa.alphabet.erase(std::unique(dfa.alphabet.begin(), dfa.alphabet.end()), dfa.alphabet.end());

    std::map<std::set<std::size_t>, std::size_t> index;
    std::deque<std::set<std::size_t>> work;
    auto intern = [&](std::set<std::size_t> s) {
        auto [it, fresh] = index.emplace(s, dfa.accepting.size());
        if (fresh) {
            dfa.accepting.push_back(s.contains(Nfa::kAccept));
            dfa.delta.emplace_back(dfa.alphabet.size(), 0);
            work.push_back(std::move(s));
        }
        return it->second;
    };
    dfa.start = intern(nfa.closure({initial}));
    while (!work.empty()) {
        auto s = std::move(work.front());
        work.pop_front();
        auto from = index.at(s);
        for (std::size_t i = 0; i < dfa.alphabet.size(); ++i) {
            std::set<std::size_t> next;
            for (auto q : s)
                for (auto [c, r] : nfa.edges[q])
                    if (c == dfa.alphabet[i]) next.insert(r);
            dfa.delta[from][i] = intern(nfa.closure(std::move(next)));
        }
    }
    return dfa;
}

bool prefix_property(const Grammar& g) {
    Dfa dfa = rl_to_dfa(g);
    auto reach = dfa.reachable();
    auto live = dfa.live();
    for (std::size_t q = 0; q < dfa.size(); ++q) {
        if (!reach[q] || !dfa.accepting[q]) continue;
        for (auto r : dfa.delta[q])
            if (live[r]) return false;
    }
    return true;
}

}  // namespace pegcfg
