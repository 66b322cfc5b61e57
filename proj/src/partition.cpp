#include "pegcfg/partition.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_text.hpp"
#include "pegcfg/strings.hpp"

namespace pegcfg {

RegularPartition::RegularPartition(std::vector<std::pair<std::string, Grammar>> blocks, std::string name)
    : name_(std::move(name)) {
    std::set<std::string> seen;
    for (auto& [block, g] : blocks) {
        if (!seen.insert(block).second) throw GrammarError("duplicate block " + block);
        if (!is_right_linear(g)) throw GrammarError("block " + block + " is not right-linear");
        Dfa dfa = rl_to_dfa(g);
        blocks_.push_back({block, std::move(g), std::move(dfa)});
    }
}

std::size_t RegularPartition::find(std::string_view block) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].name == block) return i;
    return std::string::npos;
}

std::string RegularPartition::alphabet() const {
    std::set<char> chars;
    for (const auto& b : blocks_)
        for (char c : b.grammar.alphabet()) chars.insert(c);
    return std::string(chars.begin(), chars.end());
}

namespace {

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Recognizes `block NAME:` with an optional trailing comment.
bool block_header(std::string_view line, std::string& name) {
    auto skip = [&](std::size_t i) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        return i;
    };
    std::size_t i = skip(0);
    if (line.substr(i, 5) != "block") return false;
    i += 5;
    if (i >= line.size() || (line[i] != ' ' && line[i] != '\t')) return false;
    i = skip(i);
    std::size_t b = i;
    while (i < line.size() && is_ident_char(line[i])) ++i;
    if (i == b) return false;
    name = std::string(line.substr(b, i - b));
    i = skip(i);
    if (i >= line.size() || line[i] != ':') return false;
    i = skip(i + 1);
    return i == line.size() || line[i] == '#';
}

bool is_blank(std::string_view line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

}  // namespace

RegularPartition parse_partition(std::string_view text, std::string name) {
    struct Section {
        std::string name;
        std::size_t line;
        std::string body;
    };
    std::vector<Section> sections;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++lineno;
        std::string header;
        if (block_header(line, header)) {
            for (const auto& s : sections)
                if (s.name == header) throw SyntaxError(lineno, 1, "duplicate block " + header);
            sections.push_back({header, lineno + 1, {}});
        } else if (sections.empty()) {
            if (!is_blank(line)) throw SyntaxError(lineno, 1, "expected 'block NAME:'");
        } else {
            sections.back().body.append(line).push_back('\n');
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (sections.empty()) throw SyntaxError(lineno, 1, "partition has no blocks");

    std::vector<std::pair<std::string, Grammar>> blocks;
    for (auto& s : sections) {
        ParseOptions opts;
        opts.allow_marker = true;
        opts.first_line = s.line;
        blocks.emplace_back(s.name, parse_grammar(s.body, opts));
    }
    return RegularPartition(std::move(blocks), std::move(name));
}

std::string render_partition(const RegularPartition& p) {
    std::string out;
    for (const auto& b : p.blocks()) {
        if (!out.empty()) out += "\n";
        out += "block " + b.name + ":\n" + render_grammar(b.grammar);
    }
    return out;
}

PartitionReport validate_partition(const RegularPartition& p, std::string_view alphabet) {
    std::set<char> sigma(alphabet.begin(), alphabet.end());
    for (char c : p.alphabet()) sigma.insert(c);
    sigma.erase(kEndMarker);
    std::string letters(sigma.begin(), sigma.end());
    std::string all = letters + kEndMarker;

    std::vector<Dfa> dfas;
    for (const auto& b : p.blocks()) dfas.push_back(rl_to_dfa(b.grammar, all));

    // The last component tracks T*·{$}: 0 before the marker, 1 just after it,
    // 2 anywhere else.
    auto universe_step = [](std::size_t u, char c) -> std::size_t {
        if (u != 0) return 2;
        return c == kEndMarker ? 1 : 0;
    };

    PartitionReport report;
    std::set<std::string> reported;
    auto problem = [&](const std::string& key, const std::string& text) {
        if (reported.insert(key).second) {
            report.valid = false;
            report.problems.push_back(text);
        }
    };

    using State = std::vector<std::size_t>;
    State init;
    for (const auto& d : dfas) init.push_back(d.start);
    init.push_back(0);
    std::map<State, std::string> seen{{init, ""}};
    std::deque<State> work{init};
    while (!work.empty()) {
        State s = std::move(work.front());
        work.pop_front();
        const std::string& w = seen.at(s);
        const std::string shown = display_string(w);
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < dfas.size(); ++i)
            if (dfas[i].accepting[s[i]]) hits.push_back(i);
        bool in_universe = s.back() == 1;
        if (in_universe && hits.empty()) problem("gap", "no block contains " + shown);
        if (in_universe) {
            for (std::size_t a = 0; a < hits.size(); ++a)
                for (std::size_t b = a + 1; b < hits.size(); ++b) {
                    const auto& x = p.blocks()[hits[a]].name;
                    const auto& y = p.blocks()[hits[b]].name;
                    problem("overlap " + x + " " + y, "blocks " + x + " and " + y + " overlap on " + shown);
                }
        } else {
            for (auto i : hits) {
                const auto& x = p.blocks()[i].name;
                problem("stray " + x, "block " + x + " contains " + shown + ", which is not in T*$");
            }
        }
        for (char c : all) {
            State next(s.size());
            for (std::size_t i = 0; i < dfas.size(); ++i) next[i] = dfas[i].delta[s[i]][dfas[i].symbol_index(c)];
            next.back() = universe_step(s.back(), c);
            if (seen.contains(next)) continue;
            std::string nw = seen.at(s) + c;
            seen.emplace(next, std::move(nw));
            work.push_back(std::move(next));
        }
    }
    return report;
}

RegularPartition prefix_classes_partition(std::string_view alphabet, std::size_t k) {
    std::set<char> chars(alphabet.begin(), alphabet.end());
    chars.erase(kEndMarker);
    std::string letters(chars.begin(), chars.end());

    std::vector<Expr> any;
    for (char c : letters) any.push_back(Expr::concat(Expr::terminal(c), Expr::nonterminal("U")));
    any.push_back(Expr::terminal(kEndMarker));
    const Expr rest = Expr::alternatives(any);

    std::vector<std::pair<std::string, Grammar>> blocks;
    std::size_t n = 0;
    for_each_string(letters, k, [&](const std::string& x) {
        std::string name = "P" + std::to_string(++n);
        if (x.size() < k) {
            blocks.emplace_back(name, Grammar(Expr::nonterminal("S"), {{"S", Expr::literal(x + kEndMarker)}}));
            return;
        }
        std::vector<Expr> seq;
        for (char c : x) seq.push_back(Expr::terminal(c));
        seq.push_back(Expr::nonterminal("U"));
        blocks.emplace_back(name, Grammar(Expr::nonterminal("S"), {{"S", Expr::sequence(seq)}, {"U", rest}}));
    });
    return RegularPartition(std::move(blocks), "prefix" + std::to_string(k));
}

}  // namespace pegcfg
