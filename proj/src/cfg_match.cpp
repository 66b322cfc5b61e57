#include "pegcfg/cfg_match.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pegcfg/errors.hpp"

namespace pegcfg {

namespace {

/// Fixed-size bit set over input positions [0, n].
class PositionSet {
public:
    explicit PositionSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

    /// this |= other; returns whether anything changed.
    bool merge(const PositionSet& other) {
        bool changed = false;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto next = words_[w] | other.words_[w];
            changed |= next != words_[w];
            words_[w] = next;
        }
        return changed;
    }

    template <typename Fn>
    void for_each(std::size_t bits, Fn&& fn) const {
        for (std::size_t i = 0; i < bits; ++i)
            if (test(i)) fn(i);
    }

private:
    std::vector<std::uint64_t> words_;
};

/// Least fixed point of the CFG inference rules over every node reachable
/// from a root expression, at every input position.
class Recognizer {
public:
    Recognizer(const Grammar& g, const Expr& root, std::string_view input) : g_(g), input_(input) {
        root_ = collect(root);
        std::size_t n = input_.size() + 1;
        table_.assign(nodes_.size(), std::vector<PositionSet>(n, PositionSet(n)));
        solve();
    }

    std::size_t root() const { return root_; }
    std::size_t positions() const { return input_.size() + 1; }
    const Expr& node(std::size_t i) const { return nodes_[i]; }
    std::size_t target(std::size_t i) const { return targets_[i]; }
    std::size_t left(std::size_t i) const { return kids_[i].first; }
    std::size_t right(std::size_t i) const { return kids_[i].second; }
    const PositionSet& ends(std::size_t node, std::size_t pos) const { return table_[node][pos]; }
    bool derives(std::size_t node, std::size_t i, std::size_t j) const { return table_[node][i].test(j); }
    std::string_view input() const { return input_; }

private:
    std::size_t collect(const Expr& e) {
        if (auto it = index_.find(e.id()); it != index_.end()) return it->second;
        switch (e.kind()) {
        case ExprKind::Not: throw GrammarError("not a PE-CFG expression: predicates have no CFG reading");
        case ExprKind::Star: throw GrammarError("repetition must be desugared before matching");
        default: break;
        }
        std::size_t id = nodes_.size();
        index_.emplace(e.id(), id);
        nodes_.push_back(e);
        targets_.push_back(0);
        kids_.emplace_back(0, 0);
        if (e.is(ExprKind::Concat) || e.is(ExprKind::Choice)) {
            std::size_t l = collect(e.left());
            std::size_t r = collect(e.right());
            kids_[id] = {l, r};
        } else if (e.is(ExprKind::NonTerminal)) {
            targets_[id] = collect(g_.production(e.name()));
        }
        order_.push_back(id);  // post-order, except through non-terminal cycles
        return id;
    }

    void solve() {
        std::size_t n = positions();
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t id : order_) {
                for (std::size_t pos = 0; pos < n; ++pos) {
                    PositionSet next(n);
                    step(id, pos, next);
                    changed |= table_[id][pos].merge(next);
                }
            }
        }
    }

    void step(std::size_t id, std::size_t pos, PositionSet& out) const {
        const Expr& e = nodes_[id];
        std::size_t n = positions();
        switch (e.kind()) {
        case ExprKind::Empty:  // empty.1
            out.set(pos);
            break;
        case ExprKind::Terminal:  // char.1
            if (pos < input_.size() && input_[pos] == e.symbol()) out.set(pos + 1);
            break;
        case ExprKind::NonTerminal:  // var.1
            out.merge(table_[targets_[id]][pos]);
            break;
        case ExprKind::Concat:  // con.1
            table_[kids_[id].first][pos].for_each(n, [&](std::size_t mid) { out.merge(table_[kids_[id].second][mid]); });
            break;
        case ExprKind::Choice:  // choice.1, choice.2
            out.merge(table_[kids_[id].first][pos]);
            out.merge(table_[kids_[id].second][pos]);
            break;
        default:
            break;
        }
    }

    const Grammar& g_;
    std::string_view input_;
    std::vector<Expr> nodes_;
    std::vector<std::size_t> targets_;
    std::vector<std::pair<std::size_t, std::size_t>> kids_;
    std::vector<std::size_t> order_;
    std::unordered_map<const void*, std::size_t> index_;
    std::vector<std::vector<PositionSet>> table_;
    std::size_t root_ = 0;
};

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b, std::uint64_t cap) { return a >= cap - std::min(b, cap) ? cap : a + b; }

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return cap;
    return std::min(a * b, cap);
}

/// Proof-tree counting over derivable (node, start, end) items. Items on a
/// dependency cycle, or depending on one, have infinitely many trees.
class TreeCounter {
public:
    TreeCounter(const Recognizer& r, std::uint64_t cap) : r_(r), cap_(cap) {}

    struct Result {
        bool divergent = false;
        std::uint64_t count = 0;
    };

    Result count(std::size_t node, std::size_t i, std::size_t j) {
        Key k{node, i, j};
        if (!done_.contains(k)) visit(k);
        return done_.at(k);
    }

private:
    struct Key {
        std::size_t node, i, j;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return (k.node * 1315423911u) ^ (k.i * 2654435761u) ^ (k.j << 20); }
    };
    using Instance = std::vector<Key>;

    std::vector<Instance> instances(const Key& k) const {
        std::vector<Instance> out;
        const Expr& e = r_.node(k.node);
        switch (e.kind()) {
        case ExprKind::Empty:
        case ExprKind::Terminal:
            out.emplace_back();
            break;
        case ExprKind::NonTerminal:
            out.push_back({{r_.target(k.node), k.i, k.j}});
            break;
        case ExprKind::Choice:
            if (r_.derives(r_.left(k.node), k.i, k.j)) out.push_back({{r_.left(k.node), k.i, k.j}});
            if (r_.derives(r_.right(k.node), k.i, k.j)) out.push_back({{r_.right(k.node), k.i, k.j}});
            break;
        case ExprKind::Concat:
            for (std::size_t mid = k.i; mid <= k.j; ++mid)
                if (r_.derives(r_.left(k.node), k.i, mid) && r_.derives(r_.right(k.node), mid, k.j))
                    out.push_back({{r_.left(k.node), k.i, mid}, {r_.right(k.node), mid, k.j}});
            break;
        default:
            break;
        }
        return out;
    }

    // Tarjan's SCC algorithm; SCCs complete in reverse topological order, so
    // every child outside the current SCC is already resolved.
    void visit(const Key& k) {
        std::size_t my = next_index_++;
        info_[k] = {my, my};
        stack_.push_back(k);
        on_stack_.insert(k);
        const auto& kids = inst_[k] = instances(k);
        for (const auto& inst : kids) {
            for (const auto& c : inst) {
                if (!info_.contains(c)) {
                    visit(c);
                    info_[k].low = std::min(info_[k].low, info_[c].low);
                } else if (on_stack_.contains(c)) {
                    info_[k].low = std::min(info_[k].low, info_[c].index);
                }
            }
        }
        if (info_[k].low != info_[k].index) return;

        std::vector<Key> scc;
        Key top;
        do {
            top = stack_.back();
            stack_.pop_back();
            on_stack_.erase(top);
            scc.push_back(top);
        } while (!(top == k));

        bool cyclic = scc.size() > 1;
        if (!cyclic) {
            for (const auto& inst : inst_[k])
                for (const auto& c : inst) cyclic |= c == k;
        }
        for (const auto& m : scc) {
            Result res;
            if (cyclic) {
                res.divergent = true;
            } else {
                for (const auto& inst : inst_[m]) {
                    std::uint64_t prod = 1;
                    for (const auto& c : inst) {
                        const auto& cr = done_.at(c);
                        if (cr.divergent) res.divergent = true;
                        prod = mul_sat(prod, cr.count, cap_);
                    }
                    res.count = add_sat(res.count, prod, cap_);
                }
            }
            done_[m] = res;
        }
    }

    struct Info {
        std::size_t index, low;
    };

    const Recognizer& r_;
    std::uint64_t cap_;
    std::size_t next_index_ = 0;
    std::unordered_map<Key, Info, KeyHash> info_;
    std::unordered_map<Key, std::vector<Instance>, KeyHash> inst_;
    std::unordered_map<Key, Result, KeyHash> done_;
    std::vector<Key> stack_;
    std::unordered_set<Key, KeyHash> on_stack_;
};

}  // namespace

CfgMatchResult cfg_match(const Grammar& g, const Expr& p, std::string_view input) {
    Recognizer r(g, p, input);
    CfgMatchResult out;
    r.ends(r.root(), 0).for_each(r.positions(), [&](std::size_t j) { out.insert(j); });
    return out;
}

std::string enumeration_alphabet(const Grammar& g, const LanguageOptions& opts) {
    if (opts.alphabet_given) return opts.alphabet;
    std::string out;
    for (char c : g.terminals())
        if (opts.markers == 0 || c != kEndMarker) out.push_back(c);
    return out;
}

StringSet cfg_language(const Grammar& g, const LanguageOptions& opts) {
    const std::string alphabet = enumeration_alphabet(g, opts);
    const std::string markers(opts.markers, kEndMarker);
    StringSet out;
    for_each_string(alphabet, opts.max_len, [&](const std::string& x) {
        if (opts.mode == LanguageMode::Exact) {
            if (cfg_match(g, g.start(), x + markers).contains(x.size())) out.insert(x);
            return;
        }
        bool hit = false;
        for_each_string(alphabet, opts.prefix_pad, [&](const std::string& y) {
            if (!hit && cfg_match(g, g.start(), x + y + markers).contains(x.size())) hit = true;
        });
        if (hit) out.insert(x);
    });
    return out;
}

bool ProofTreeCount::ambiguous() const {
    if (!divergent.empty()) return true;
    return std::any_of(per_suffix.begin(), per_suffix.end(), [](const auto& kv) { return kv.second > 1; });
}

ProofTreeCount count_proof_trees(const Grammar& g, std::string_view input, std::uint64_t cap) {
    Recognizer r(g, g.start(), input);
    TreeCounter counter(r, cap);
    ProofTreeCount out;
    r.ends(r.root(), 0).for_each(r.positions(), [&](std::size_t j) {
        auto res = counter.count(r.root(), 0, j);
        if (res.divergent) {
            out.divergent.insert(j);
            return;
        }
        out.per_suffix[j] = res.count;
        out.total = add_sat(out.total, res.count, cap);
        if (res.count >= cap) out.status = CountStatus::Capped;
    });
    if (!out.divergent.empty()) out.status = CountStatus::Divergent;
    return out;
}

}  // namespace pegcfg
