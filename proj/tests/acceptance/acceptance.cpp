// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "random_suite.hpp"
#include "pegcfg/automaton.hpp"
#include "pegcfg/block.hpp"
#include "pegcfg/cfg_match.hpp"
#include "pegcfg/compare.hpp"
#include "pegcfg/grammar_ops.hpp"
#include "pegcfg/grammar_text.hpp"
#include "pegcfg/lookahead.hpp"
#include "pegcfg/oracle.hpp"
#include "pegcfg/partition.hpp"
#include "pegcfg/peg_match.hpp"
#include "pegcfg/transforms.hpp"

using namespace pegcfg;

namespace {

/// Collects the reasons a criterion failed.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) problems_.push_back(what);
    }
    bool ok() const { return problems_.empty(); }
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

StringSet with_markers(const Grammar& g, bool peg, std::size_t max_len, std::size_t markers, const std::string& alphabet) {
    LanguageOptions opts;
    opts.max_len = max_len;
    opts.markers = markers;
    opts.alphabet = alphabet;
    opts.alphabet_given = true;
    return peg ? peg_language(g, opts) : cfg_language(g, opts);
}

const char* kPhiBefore = R"(# transform: phi_before k=2
start: S
S -> &('a' 'b' | 'c' '$') A | B
A -> &('a' 'b') 'a' 'b' | C
B -> &('a' '$') 'a' | C 'd'
C -> 'c'
)";

const char* kPhiAfter = R"(# transform: phi_after k=2
start: S
S -> A &('$' '$') | B &('$' '$')
A -> 'a' 'b' &('$' '$') | C &('$' '$')
B -> 'a' &('$' '$') | C 'd' &('$' '$')
C -> 'c' &('$' '$' | 'd' '$')
)";

const StringSet kG2Cfg{"a", "ab", "c", "cd"};

void ac1(Check& c) {
    c.expect(cfg_match(fixtures::g1(), "abac") == CfgMatchResult{2}, "cfg_match(G1, abac) != {2}");
    c.expect(peg_match(fixtures::g1(), "abac").failed(), "peg_match(G1, abac) did not fail");
}

void ac2(Check& c) {
    c.expect(cfg_language(fixtures::g2(), 2) == kG2Cfg, "CFG language of G2");
    c.expect(peg_language(fixtures::g2(), 2) == StringSet{"a", "ab", "c"}, "PEG language of G2");
    c.expect(peg_language(fixtures::g2_swapped(), 2) == StringSet{"a", "c", "cd"}, "PEG language of G2 with S -> B | A");
}

void ac3(Check& c) {
    auto t = phi_before(fixtures::g2(), 2);
    c.expect(render_transformed(t) == kPhiBefore, "rendered phi_before(G2, 2):\n" + render_transformed(t));
    c.expect(with_markers(t.grammar, true, 2, 2, "abcd") == kG2Cfg, "PEG language of phi_before(G2, 2)");
}

void ac4(Check& c) {
    auto t = phi_after(fixtures::g2(), 2);
    c.expect(render_transformed(t) == kPhiAfter, "rendered phi_after(G2, 2):\n" + render_transformed(t));
    c.expect(with_markers(t.grammar, true, 2, 2, "abcd") == kG2Cfg, "PEG language of phi_after(G2, 2)");
}

void ac5(Check& c) {
    c.expect(erase_predicates(phi_before(fixtures::g2(), 2).grammar) == fixtures::g2(), "erasure differs from G2");
}

void ac6(Check& c) {
    std::size_t bad = 0;
    for (const Grammar& g : suite::grammars(GrammarClass::Ll1, 50, 6000))
        if (compare_languages(reorder_ll1(g), 6, 1).verdict != Verdict::Equal) ++bad;
    c.expect(bad == 0, std::to_string(bad) + " counterexamples");
}

std::vector<Grammar> complete_suite() { return suite::grammars(GrammarClass::Complete, 200, 7000); }

void ac7(Check& c) {
    std::size_t bad = 0;
    for (const Grammar& g : complete_suite()) {
        auto peg = peg_language(g, 6);
        auto cfg = cfg_language(g, 6);
        for (const auto& x : peg)
            if (!cfg.contains(x)) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " strings in a PEG language but not the CFG language");
}

void ac8(Check& c) {
    std::size_t bad = 0, pairs = 0;
    for (const Grammar& g : complete_suite()) {
        for_each_string(g.alphabet(), 6, [&](const std::string& x) {
            ++pairs;
            if (peg_match(g, x, Memo::On) != peg_match(g, x, Memo::Off)) ++bad;
        });
    }
    c.expect(pairs > 0 && bad == 0, std::to_string(bad) + " disagreements over " + std::to_string(pairs) + " pairs");
}

void ac9(Check& c) {
    Grammar g4 = fixtures::g4();
    c.expect(cfg_language(g4, 3) == StringSet{"a", "aa"}, "CFG language of G4");
    c.expect(peg_language(g4, 3) == StringSet{"a"}, "PEG language of G4");
    auto t = pi_prefix(g4);
    c.expect(with_markers(t.grammar, false, 3, 0, "a$") == StringSet{"a$", "aa$"}, "CFG language of pi(G4)");
    c.expect(with_markers(t.grammar, true, 3, 0, "a$") == StringSet{"a$", "aa$"}, "PEG language of pi(G4)");
    c.expect(!prefix_property(g4), "G4 has the prefix property");
    c.expect(prefix_property(t.grammar), "pi(G4) lacks the prefix property");
}

StringSet g5_language() {
    StringSet out;
    for (std::size_t n = 0; n <= 5; ++n) {
        out.insert(std::string(n, 'a') + "c");
        out.insert(std::string(n, 'a') + "d");
    }
    return out;
}

/// The LL-regular claims for G5, for one partition.
void g5_claims(Check& c, const RegularPartition& pi, const std::string& label) {
    Grammar g5 = fixtures::g5();
    auto report = is_ll_regular(g5, pi);
    if (!report.holds) {
        std::string why = "is_ll_regular(G5, " + label + ") fails:";
        std::istringstream lines(describe(report));
        for (std::string line; std::getline(lines, line);) why += "\n      " + line;
        c.expect(false, why);
        return;
    }
    auto t = rho_ll_regular(g5, pi);
    c.expect(with_markers(t.grammar, true, 6, 1, "acd") == g5_language(),
             "PEG language of rho(G5, " + label + ") over x$");
    c.expect(with_markers(g5, false, 6, 1, "acd") == g5_language(), "CFG language of G5 over x$");
}

void ac10(Check& c, std::ostream& notes) {
    StringSet oracle;
    for_each_string("acd", 6, [&](const std::string& x) {
        if (oracle_membership(fixtures::g5(), x)) oracle.insert(x);
    });
    c.expect(oracle == g5_language(), "oracle language of G5");

    g5_claims(c, fixtures::pi_g5(), "pi");

    // The same claims with B1 and B2 split by their first symbol.
    Check refined;
    g5_claims(refined, fixtures::pi_g5_refined(), "pi'");
    notes << "      with pi' = {c$, a+c$, d$, a+d$, rest}: "
          << (refined.ok() ? "is_ll_regular holds and rho(G5, pi') has the expected language" : "also fails") << "\n";
    for (const auto& p : refined.problems()) notes << "      " << p << "\n";
}

void ac11(Check& c) {
    std::vector<Grammar> all{fixtures::g1(), fixtures::g2(), fixtures::g3(), fixtures::g4(), fixtures::g5()};
    for (const Grammar& g : suite::grammars(GrammarClass::Any, 100, 8000)) all.push_back(g);
    std::size_t bad = 0, pairs = 0;
    for (const Grammar& g : all) {
        for_each_string(g.alphabet(), 5, [&](const std::string& x) {
            ++pairs;
            if (cfg_match(g, x).contains(x.size()) != oracle_membership(g, x)) ++bad;
        });
    }
    c.expect(bad == 0, std::to_string(bad) + " disagreements over " + std::to_string(pairs) + " pairs");
}

void ac12(Check& c) {
    auto follow = compute_tables(fixtures::g2(), 2).follow("C");
    c.expect(follow == StringSet{"d$", "$$"}, "FOLLOW_2(C) = " + format_set(follow));
    c.expect(validate_partition(fixtures::pi_g5()).valid, "pi of G5 rejected");
    auto r = validate_partition(fixtures::pi_g5_overlapping());
    c.expect(!r.valid, "overlapping partition accepted");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Check&, std::ostream&)> run;
    };
    auto plain = [](void (*f)(Check&)) { return [f](Check& c, std::ostream&) { f(c); }; };
    std::vector<Criterion> criteria{
        {1, "G1 on abac: CFG consumes 2, PEG fails", plain(ac1)},
        {2, "G2 languages under CFG, PEG and swapped PEG", plain(ac2)},
        {3, "phi_before(G2, 2) listing and language", plain(ac3)},
        {4, "phi_after(G2, 2) listing and language", plain(ac4)},
        {5, "erasure of phi_before(G2, 2) is G2", plain(ac5)},
        {6, "50 random LL(1) grammars after reordering compare equal", plain(ac6)},
        {7, "200 random complete grammars: PEG language within CFG language", plain(ac7)},
        {8, "memoized and plain PEG matching agree", plain(ac8)},
        {9, "G4 languages, Pi(G4) languages and prefix property", plain(ac9)},
        {10, "G5 is LL-regular for pi and rho(G5, pi) keeps its language", ac10},
        {11, "cfg_match agrees with the derivation oracle", plain(ac11)},
        {12, "FOLLOW_2(C) of G2 and partition validity", plain(ac12)},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        std::ostringstream notes;
        try {
            cr.run(c, notes);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << "AC" << cr.id << " " << (c.ok() ? "PASS" : "FAIL") << " - " << cr.title << "\n";
        for (const auto& p : c.problems()) std::cout << "    " << p << "\n";
        std::cout << notes.str();
        if (!c.ok()) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
