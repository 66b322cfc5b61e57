#include "doctest.h"

#include "json.hpp"

#include "fixtures.hpp"
#include "random_suite.hpp"
#include "pegcfg/automaton.hpp"
#include "pegcfg/cfg_match.hpp"
#include "pegcfg/compare.hpp"
#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_ops.hpp"
#include "pegcfg/grammar_text.hpp"
#include "pegcfg/lookahead.hpp"
#include "pegcfg/oracle.hpp"
#include "pegcfg/peg_match.hpp"
#include "pegcfg/transforms.hpp"

using namespace pegcfg;

TEST_SUITE("equivalence") {

TEST_CASE("oracle_membership examples") {
    CHECK(oracle_membership(fixtures::g2(), "cd"));
    CHECK_FALSE(oracle_membership(fixtures::g2(), "ad"));
    CHECK(oracle_membership(fixtures::g1(), "ab"));
    CHECK(oracle_membership(fixtures::g1(), "abab"));
    CHECK_FALSE(oracle_membership(fixtures::g1(), "aba"));
    CHECK(oracle_membership(fixtures::g3(), ""));
    CHECK_FALSE(oracle_membership(fixtures::g4(), ""));
}

TEST_CASE("oracle handles left recursion, cycles and nullable chains") {
    Grammar e = parse_grammar("start: E\nE -> E '+' T | T\nT -> 'x' | '(' E ')'\n");
    CHECK(oracle_membership(e, "x+(x+x)"));
    CHECK_FALSE(oracle_membership(e, "x+"));
    Grammar cyc = parse_grammar("start: S\nS -> S | A S | 'a'\nA -> eps | 'b'\n");
    CHECK(oracle_membership(cyc, "bba"));
    CHECK_FALSE(oracle_membership(cyc, "ab"));
    CHECK(oracle_membership(parse_grammar("start: S\nS -> A A\nA -> eps\n"), ""));
    CHECK_THROWS_AS(oracle_membership(parse_grammar("start: S\nS -> !'a' 'b'\n"), "b"), GrammarError);
}

TEST_CASE("cfg_match agrees with the oracle") {
    std::vector<Grammar> all{fixtures::g1(), fixtures::g2(), fixtures::g3(), fixtures::g4(), fixtures::g5()};
    for (const Grammar& g : suite::grammars(GrammarClass::Any, 100, 5000)) all.push_back(g);
    std::size_t disagreements = 0;
    for (const Grammar& g : all) {
        for_each_string(g.alphabet(), 5, [&](const std::string& x) {
            if (cfg_match(g, x).contains(x.size()) != oracle_membership(g, x)) ++disagreements;
        });
    }
    CHECK(disagreements == 0);
}

TEST_CASE("compare_languages examples") {
    auto r = compare_languages(fixtures::g2(), 2, 0);
    CHECK(r.only_cfg == StringSet{"cd"});
    CHECK(r.only_peg.empty());
    CHECK(r.common == 3);
    CHECK(r.verdict == Verdict::CfgSuperset);

    CHECK(compare_languages(reorder_ll1(fixtures::g3()), 1, 1).verdict == Verdict::Equal);
    CHECK(compare_languages(phi_before(fixtures::g2(), 2).grammar, fixtures::g2(), 2, 2).verdict == Verdict::Equal);
}

TEST_CASE("compare_languages flags PEG-only strings") {
    // a PEG with a guard against a CFG that lacks the string
    Grammar peg = parse_grammar("start: S\nS -> 'a' | 'b'\n");
    Grammar cfg = parse_grammar("start: S\nS -> 'a' | 'c'\n");
    auto r = compare_languages(peg, cfg, 1, 0);
    CHECK(r.only_peg == StringSet{"b"});
    CHECK(r.only_cfg == StringSet{"c"});
    CHECK(r.verdict == Verdict::Incomparable);
}

TEST_CASE("compare_languages preconditions") {
    CHECK_THROWS_AS(compare_languages(parse_grammar("start: A\nA -> A 'a' | 'a'\n"), 2, 0), GrammarError);
    CHECK_THROWS_AS(compare_languages(fixtures::g2(), phi_before(fixtures::g2(), 2).grammar, 2, 2), GrammarError);
}

TEST_CASE("compare reports are deterministic") {
    Grammar g = suite::grammars(GrammarClass::Complete, 1, 77)[0];
    auto first = render_json(compare_languages(g, 7, 1));
    for (int i = 0; i < 5; ++i) CHECK(render_json(compare_languages(g, 7, 1)) == first);
}

TEST_CASE("report rendering") {
    auto r = compare_languages(fixtures::g2(), 2, 0);
    CHECK(render_text(r) ==
          "max-len: 2\nmarkers: 0\nverdict: cfg_superset\ncommon: 3\nonly-cfg: cd\nonly-peg: (none)\n");
    auto j = nlohmann::json::parse(render_json(r));
    CHECK(j["verdict"] == "cfg_superset");
    CHECK(j["only_cfg"] == nlohmann::json::array({"cd"}));
    CHECK(j["only_peg"].empty());
    CHECK(j["common"] == 3);
    CHECK(j["max_len"] == 2);
    CHECK(to_string(Verdict::Equal) == "equal");
    CHECK(to_string(Verdict::Incomparable) == "incomparable");
}

TEST_CASE("PEG language is contained in the CFG language") {
    for (const Grammar& g : suite::grammars(GrammarClass::Complete, 200, 5200)) {
        auto r = compare_languages(g, 6, 0);
        CHECK(r.only_peg.empty());
        CHECK(r.verdict != Verdict::Incomparable);
    }
}

TEST_CASE("random_grammar determinism") {
    GeneratorConfig cfg;
    cfg.seed = 1;
    cfg.constraint = GrammarClass::Ll1;
    CHECK(random_grammar(cfg) == random_grammar(cfg));
    CHECK(render_grammar(random_grammar(cfg)) == render_grammar(random_grammar(cfg)));
    GeneratorConfig other = cfg;
    other.seed = 2;
    CHECK_FALSE(render_grammar(random_grammar(cfg)) == render_grammar(random_grammar(other)));
}

TEST_CASE("random_grammar class constraints") {
    GeneratorConfig cfg;
    cfg.seed = 1;
    cfg.constraint = GrammarClass::Ll1;
    CHECK(is_ll1(random_grammar(cfg)).holds);

    for (const Grammar& g : suite::grammars(GrammarClass::StrongLlk, 100, 1, 2)) {
        CHECK(is_strong_llk(g, 2).holds);
        CHECK(left_recursive_nonterminals(g).empty());
    }
    for (const Grammar& g : suite::grammars(GrammarClass::RightLinear, 50, 1)) CHECK(is_right_linear(g));
    for (const Grammar& g : suite::grammars(GrammarClass::Complete, 50, 1)) CHECK(left_recursive_nonterminals(g).empty());
    for (const Grammar& g : suite::grammars(GrammarClass::Any, 50, 1)) {
        CHECK(remove_useless(g) == g);
        CHECK(g.start().is(ExprKind::NonTerminal));
        CHECK(check_bnf(g).has_choice_structure());
    }
}

TEST_CASE("random_grammar attempt cap") {
    GeneratorConfig cfg;
    cfg.terminals = "a";
    cfg.max_nonterminals = 1;
    cfg.max_alternatives = 1;
    cfg.max_attempts = 50;
    // one alternative per non-terminal never contains a choice
    CHECK_THROWS_WITH_AS(random_grammar(cfg), "random grammar: attempt cap of 50 exhausted", Error);
    cfg.terminals.clear();
    CHECK_THROWS_AS(random_grammar(cfg), Error);
}

TEST_CASE("LL(1) correspondence over the random suite") {
    for (const Grammar& g : suite::grammars(GrammarClass::Ll1, 50, 5400))
        CHECK(compare_languages(reorder_ll1(g), 6, 1).verdict == Verdict::Equal);
}

TEST_CASE("phi transforms over the random strong-LL(2) suite") {
    for (const Grammar& g : suite::grammars(GrammarClass::StrongLlk, 30, 5600, 2)) {
        CHECK(compare_languages(phi_before(g, 2).grammar, g, 6, 2).verdict == Verdict::Equal);
        CHECK(compare_languages(phi_after(g, 2).grammar, g, 6, 2).verdict == Verdict::Equal);
    }
}

}  // TEST_SUITE
