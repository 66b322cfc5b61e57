#include "doctest.h"

#include "oracles.hpp"
#include "random_suite.hpp"
#include "fixtures.hpp"
#include "pegcfg/cfg_match.hpp"
#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_ops.hpp"
#include "pegcfg/grammar_text.hpp"
#include "pegcfg/peg_match.hpp"
#include "pegcfg/transforms.hpp"

using namespace pegcfg;

namespace {

Expr t(char c) { return Expr::terminal(c); }
Expr nt(const char* n) { return Expr::nonterminal(n); }

ProductionList abc_list() {
    ProductionList pl;
    pl.start = "A";
    pl.rules = {{"A", Expr::concat(nt("B"), nt("C"))}, {"B", t('a')}, {"B", t('b')},
                {"C", t('c')},                         {"C", t('d')}, {"C", t('e')}};
    return pl;
}

}  // namespace

TEST_SUITE("grammar_core") {

TEST_CASE("parse G1") {
    Grammar g = fixtures::g1();
    CHECK(g.nonterminals() == std::vector<std::string>{"S", "A", "B"});
    CHECK(g.production("A") == Expr::choice(Expr::concat(t('a'), Expr::concat(t('b'), t('a'))), t('a')));
    CHECK(g.start() == nt("S"));
    CHECK(g.alphabet() == "ab");
}

TEST_CASE("parse eps and comments") {
    Grammar g = parse_grammar("# leading comment\nstart: S\nS -> eps   # trailing\n");
    CHECK(g.production("S") == Expr::empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(parse_grammar("start: S\nS -> A\n"), doctest::Contains("undeclared non-terminal A"), Error);
    CHECK_THROWS_AS(parse_grammar("start: S\nS -> 'a' |\n"), SyntaxError);
    CHECK_THROWS_AS(parse_grammar("S -> 'a'\n"), SyntaxError);
    CHECK_THROWS_AS(parse_grammar("start: S\nS -> 'a'\nS -> 'b'\n"), SyntaxError);
    CHECK_THROWS_AS(parse_grammar("start: S\nS -> 'ab'\n"), SyntaxError);
    CHECK_THROWS_WITH_AS(parse_grammar("start: S\nS -> 'a' '$'\n"), doctest::Contains("reserved"), SyntaxError);
    ParseOptions opts;
    opts.allow_marker = true;
    CHECK(parse_grammar("start: S\nS -> 'a' '$'\n", opts).uses_marker());
}

TEST_CASE("syntax error carries line and column") {
    try {
        parse_grammar("start: S\nS -> 'a' ) 'b'\n");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 10);
    }
}

TEST_CASE("choice is right-associative and binds loosest") {
    Expr e = parse_expression("'a' 'b' | 'c' | 'd'");
    CHECK(e == Expr::choice(Expr::concat(t('a'), t('b')), Expr::choice(t('c'), t('d'))));
    CHECK(parse_expression("&'a'") == Expr::negation(Expr::negation(t('a'))));
    CHECK(parse_expression("!'a' 'b'") == Expr::concat(Expr::negation(t('a')), t('b')));
    CHECK(parse_expression("'a'*") == Expr::star(t('a')));
}

TEST_CASE("render") {
    CHECK(render_grammar(fixtures::g3()) == "start: S\nS -> 'a' | eps\n");
    Grammar g = parse_grammar("start: S\nS -> !'a' 'b' | &('a' | 'b') 'a'\n");
    std::string text = render_grammar(g);
    CHECK(text.find("!('a')") != std::string::npos);
    CHECK(text.find("&('a' | 'b')") != std::string::npos);
}

TEST_CASE("round trip") {
    for (const Grammar& g : {fixtures::g1(), fixtures::g2(), fixtures::g3(), fixtures::g4(), fixtures::g5()})
        CHECK(parse_grammar(render_grammar(g)) == g);
    Grammar nested = parse_grammar("start: (S | 'b') 'c'\nS -> ('a' 'b')* !(S 'a') | &'c' | eps\n");
    CHECK(parse_grammar(render_grammar(nested)) == nested);
    auto phi = phi_before(fixtures::g2(), 2);
    CHECK(parse_grammar(render_transformed(phi)) == phi.grammar);
    for (const Grammar& g : suite::grammars(GrammarClass::Any, 50)) CHECK(parse_grammar(render_grammar(g)) == g);
}

TEST_CASE("structural equality ignores declaration order") {
    Grammar a = parse_grammar("start: S\nS -> A\nA -> 'a'\n");
    Grammar b = parse_grammar("start: S\nA -> 'a'\nS -> A\n");
    CHECK(a == b);
    CHECK_FALSE(a == parse_grammar("start: S\nS -> A\nA -> 'b'\n"));
}

TEST_CASE("desugar") {
    Grammar g = desugar(parse_grammar("start: S\nS -> 'a'*\n"));
    CHECK(g == parse_grammar("start: S\nS -> _R1\n_R1 -> 'a' _R1 | eps\n"));
    CHECK_FALSE(g.has_repetitions());

    Grammar plain = fixtures::g2();
    CHECK(desugar(plain) == plain);

    Grammar twice = desugar(parse_grammar("start: S\nS -> 'a'* 'a'*\n"));
    CHECK(twice == parse_grammar("start: S\nS -> _R1 _R1\n_R1 -> 'a' _R1 | eps\n"));
    CHECK(cfg_language(twice, 5) == cfg_language(desugar(parse_grammar("start: S\nS -> 'a'*\n")), 5));
}

TEST_CASE("desugar skips taken names and numbers by first occurrence") {
    Grammar g = desugar(parse_grammar("start: S 'c'*\nS -> 'a'* _R1\n_R1 -> 'b'\n"));
    CHECK(g.has("_R2"));
    CHECK(g.has("_R3"));
    CHECK(g.production("_R2") == Expr::choice(Expr::concat(t('c'), nt("_R2")), Expr::empty()));
    CHECK(g.production("_R3") == Expr::choice(Expr::concat(t('a'), nt("_R3")), Expr::empty()));
}

TEST_CASE("cfg_to_pecfg") {
    Grammar g = cfg_to_pecfg(abc_list());
    CHECK(g.start() == nt("A"));
    CHECK(g.production("A") == Expr::concat(nt("B"), nt("C")));
    CHECK(g.production("B") == Expr::choice(t('a'), t('b')));
    CHECK(g.production("C") == Expr::choice(t('c'), Expr::choice(t('d'), t('e'))));

    ProductionList single;
    single.start = "A";
    single.rules = {{"A", t('a')}};
    CHECK(cfg_to_pecfg(single).production("A") == t('a'));

    ProductionList swapped = abc_list();
    std::swap(swapped.rules[1], swapped.rules[2]);
    CHECK(cfg_to_pecfg(swapped).production("B") == Expr::choice(t('b'), t('a')));
}

TEST_CASE("pecfg_to_cfg") {
    auto pl = pecfg_to_cfg(parse_grammar("start: C\nC -> 'c' | ('d' | 'e')\n"));
    CHECK(pl.rules == std::vector<ProductionRule>{{"C", t('c')}, {"C", t('d')}, {"C", t('e')}});

    pl = pecfg_to_cfg(parse_grammar("start: A\nA -> ('a' | 'b') 'c'\n"));
    CHECK(pl.rules == std::vector<ProductionRule>{{"A", Expr::concat(t('a'), t('c'))}, {"A", Expr::concat(t('b'), t('c'))}});

    pl = pecfg_to_cfg(parse_grammar("start: A\nA -> 'a' | 'a'\n"));
    CHECK(pl.rules == std::vector<ProductionRule>{{"A", t('a')}});

    CHECK_THROWS_AS(pecfg_to_cfg(parse_grammar("start: A\nA -> !'a' 'b'\n")), GrammarError);
}

TEST_CASE("T inverse") {
    CHECK(pecfg_to_cfg(cfg_to_pecfg(abc_list())) == abc_list());
    ProductionList dup = abc_list();
    dup.rules.push_back({"B", t('a')});
    CHECK(pecfg_to_cfg(cfg_to_pecfg(dup)) == abc_list());
    for (const Grammar& g : suite::grammars(GrammarClass::Any, 50, 300)) {
        auto pl = pecfg_to_cfg(g);
        CHECK(pecfg_to_cfg(cfg_to_pecfg(pl)) == pl);
        // duplicate alternatives collapse, so only the language comes back
        CHECK(cfg_language(cfg_to_pecfg(pl), 5) == cfg_language(g, 5));
    }
}

TEST_CASE("check_bnf") {
    CHECK(check_bnf(fixtures::g2()).has_bnf_structure());

    auto r = check_bnf(parse_grammar("start: S\nS -> ('a' | 'b') 'c'\n"));
    REQUIRE(r.property1_violations.size() == 1);
    CHECK(r.property1_violations[0].nonterminal == "S");
    CHECK(r.property2_ok);

    r = check_bnf(parse_grammar("start: S\nS -> eps | 'a'\n"));
    CHECK(r.property1_violations.empty());
    CHECK(r.property3_violations.size() == 1);
    CHECK_FALSE(r.has_bnf_structure());
    CHECK(r.has_choice_structure());

    CHECK_FALSE(check_bnf(parse_grammar("start: S 'a'\nS -> 'b'\n")).property2_ok);
}

TEST_CASE("normalize_bnf") {
    Grammar g = normalize_bnf(parse_grammar("start: A B\nA -> 'a'\nB -> 'b'\n"));
    CHECK(g.start() == nt("_R1"));
    CHECK(g.production("_R1") == Expr::concat(nt("A"), nt("B")));

    g = normalize_bnf(parse_grammar("start: S\nS -> ('a' | 'b') 'c'\n"));
    CHECK(g == parse_grammar("start: S\nS -> 'a' 'c' | 'b' 'c'\n"));

    CHECK(normalize_bnf(fixtures::g2()) == fixtures::g2());
    CHECK(normalize_bnf(fixtures::g5()) == fixtures::g5());
}

TEST_CASE("normalize_bnf preserves the CFG language") {
    // Random grammars are already flat, so nest them: replace each
    // production by a factored form before normalizing.
    int checked = 0;
    for (const Grammar& g : suite::grammars(GrammarClass::Any, 50, 700)) {
        std::vector<Grammar::Production> prods;
        for (const auto& [name, rhs] : g.productions()) {
            auto alts = choice_spine(rhs);
            Expr head = Expr::alternatives(alts);
            prods.emplace_back(name, Expr::concat(Expr::choice(head, Expr::empty()), Expr::empty()));
        }
        Grammar nested(Expr::concat(g.start(), Expr::empty()), prods);
        Grammar normal = normalize_bnf(nested);
        CHECK(normal.start().is(ExprKind::NonTerminal));
        CHECK(check_bnf(normal).has_choice_structure());
        CHECK(cfg_language(normal, 6) == cfg_language(nested, 6));
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("left_recursive_nonterminals") {
    CHECK(left_recursive_nonterminals(parse_grammar("start: A\nA -> A 'a' | 'a'\n")) == NameSet{"A"});
    CHECK(left_recursive_nonterminals(parse_grammar("start: A\nA -> B 'a'\nB -> A 'b'\n")) == NameSet{"A", "B"});
    CHECK(left_recursive_nonterminals(fixtures::g2()).empty());
    CHECK(left_recursive_nonterminals(parse_grammar("start: A\nA -> B A 'a' | 'b'\nB -> eps\n")) == NameSet{"A"});
    CHECK(left_recursive_nonterminals(parse_grammar("start: A\nA -> 'b' A | eps\n")).empty());
    // reaching a cycle counts too
    CHECK(left_recursive_nonterminals(parse_grammar("start: S\nS -> A\nA -> A 'a' | 'a'\n")) == NameSet{"S", "A"});
}

TEST_CASE("no left recursion means the PEG matcher terminates") {
    for (const Grammar& g : suite::grammars(GrammarClass::Complete, 50, 900)) {
        REQUIRE(left_recursive_nonterminals(g).empty());
        for_each_string(g.alphabet(), 6, [&](const std::string& x) { (void)peg_match(g, x); });
    }
    for_each_string("abcd", 6, [&](const std::string& x) { (void)peg_match(fixtures::g2(), x); });
}

TEST_CASE("remove_useless") {
    CHECK(remove_useless(fixtures::g2()) == fixtures::g2());

    Grammar g = parse_grammar("start: S\nS -> 'a' | B\nB -> B\nC -> 'c'\n");
    CHECK(remove_useless(g) == parse_grammar("start: S\nS -> 'a'\n"));

    CHECK_THROWS_WITH_AS(remove_useless(parse_grammar("start: S\nS -> S 'a'\n")), doctest::Contains("empty language"),
                         GrammarError);

    CHECK(cfg_language(remove_useless(g), 3) == cfg_language(g, 3));
}

}  // TEST_SUITE
