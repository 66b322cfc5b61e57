#include "pegcfg/oracle.hpp"

#include <deque>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_ops.hpp"

namespace pegcfg {

namespace {

using Form = std::vector<int>;  // >= 0: non-terminal, < 0: terminal

int encode_terminal(char c) { return -1 - static_cast<unsigned char>(c); }
char decode_terminal(int s) { return static_cast<char>(-1 - s); }

constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();

struct RuleSet {
    int start = 0;
    std::vector<std::vector<Form>> rules;  // per non-terminal
};

RuleSet production_view(const Grammar& g) {
    if (g.has_predicates()) throw GrammarError("the oracle needs a predicate-free grammar");
    if (g.has_repetitions()) throw GrammarError("repetition must be desugared first");
    RuleSet out;
    std::map<std::string, int> ids;
    for (const auto& n : g.nonterminals()) ids.emplace(n, static_cast<int>(ids.size()));
    auto to_form = [&](const Expr& alt) {
        Form f;
        for (const auto& s : symbols_of(alt))
            f.push_back(s.is(ExprKind::Terminal) ? encode_terminal(s.symbol()) : ids.at(s.name()));
        return f;
    };
    out.rules.resize(ids.size() + 1);
    for (const auto& [name, rhs] : g.productions())
        for (const auto& alt : distribute(rhs)) out.rules[ids.at(name)].push_back(to_form(alt));
    // A synthetic start symbol keeps arbitrary start expressions uniform.
    out.start = static_cast<int>(ids.size());
    for (const auto& alt : distribute(g.start())) out.rules[out.start].push_back(to_form(alt));
    return out;
}

std::vector<bool> nullable_symbols(const RuleSet& rs) {
    std::vector<bool> nullable(rs.rules.size(), false);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t n = 0; n < rs.rules.size(); ++n) {
            if (nullable[n]) continue;
            for (const auto& f : rs.rules[n]) {
                bool all = true;
                for (int s : f) all = all && s >= 0 && nullable[s];
                if (all) {
                    nullable[n] = changed = true;
                    break;
                }
            }
        }
    }
    return nullable;
}

/// Every rule variant obtained by dropping some nullable occurrences, except
/// the empty one.
RuleSet without_epsilon(const RuleSet& rs, const std::vector<bool>& nullable) {
    RuleSet out;
    out.start = rs.start;
    out.rules.resize(rs.rules.size());
    for (std::size_t n = 0; n < rs.rules.size(); ++n) {
        std::set<Form> variants;
        for (const auto& f : rs.rules[n]) {
            std::vector<Form> partial{{}};
            for (int s : f) {
                std::vector<Form> next;
                for (auto& p : partial) {
                    if (s >= 0 && nullable[s]) next.push_back(p);
                    p.push_back(s);
                    next.push_back(std::move(p));
                }
                partial = std::move(next);
            }
            for (auto& p : partial)
                if (!p.empty()) variants.insert(std::move(p));
        }
        out.rules[n].assign(variants.begin(), variants.end());
    }
    return out;
}

std::vector<std::size_t> shortest_yields(const RuleSet& rs) {
    std::vector<std::size_t> len(rs.rules.size(), kInfinite);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t n = 0; n < rs.rules.size(); ++n) {
            for (const auto& f : rs.rules[n]) {
                std::size_t total = 0;
                for (int s : f) {
                    std::size_t l = s < 0 ? 1 : len[s];
                    if (l == kInfinite) {
                        total = kInfinite;
                        break;
                    }
                    total += l;
                }
                if (total < len[n]) {
                    len[n] = total;
                    changed = true;
                }
            }
        }
    }
    return len;
}

}  // namespace

bool oracle_membership(const Grammar& g, std::string_view x) {
    RuleSet full = production_view(g);
    auto nullable = nullable_symbols(full);
    if (x.empty()) return nullable[full.start];

    RuleSet rs = without_epsilon(full, nullable);
    auto shortest = shortest_yields(rs);
    const std::size_t n = x.size();

    using State = std::pair<std::size_t, Form>;
    std::set<State> seen;
    std::deque<State> queue;
    // Consumes matching leading terminals; false if the form is dead.
    auto settle = [&](std::size_t pos, Form form) {
        std::size_t lead = 0;
        while (lead < form.size() && form[lead] < 0) {
            if (pos >= n || x[pos] != decode_terminal(form[lead])) return;
            ++pos;
            ++lead;
        }
        form.erase(form.begin(), form.begin() + static_cast<std::ptrdiff_t>(lead));
        std::size_t need = 0;
        for (int s : form) {
            std::size_t l = s < 0 ? 1 : shortest[s];
            if (l == kInfinite || need + l > n - pos) return;
            need += l;
        }
        State st{pos, std::move(form)};
        if (seen.insert(st).second) queue.push_back(std::move(st));
    };

    settle(0, Form{full.start});
    while (!queue.empty()) {
        auto [pos, form] = std::move(queue.front());
        queue.pop_front();
        if (form.empty()) {
            if (pos == n) return true;
            continue;
        }
        Form rest(form.begin() + 1, form.end());
        for (const auto& rhs : rs.rules[form.front()]) {
            Form next = rhs;
            next.insert(next.end(), rest.begin(), rest.end());
            settle(pos, std::move(next));
        }
    }
    return false;
}

}  // namespace pegcfg
