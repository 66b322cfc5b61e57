#include "pegcfg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pegcfg/automaton.hpp"
#include "pegcfg/block.hpp"
#include "pegcfg/cfg_match.hpp"
#include "pegcfg/compare.hpp"
#include "pegcfg/errors.hpp"
#include "pegcfg/grammar_ops.hpp"
#include "pegcfg/grammar_text.hpp"
#include "pegcfg/lookahead.hpp"
#include "pegcfg/partition.hpp"
#include "pegcfg/peg_match.hpp"
#include "pegcfg/transforms.hpp"

namespace pegcfg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string format = "text";
    std::string file;
    std::string against;
    std::string partition;
    std::string sem = "cfg";
    std::string input;
    std::string mode = "exact";
    std::string klass;
    std::string kind;
    std::string output;
    std::size_t k = 1;
    std::size_t max_len = 4;
    std::size_t markers = 0;
    bool memo = false;
    std::string exempt_last;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Grammar load_grammar(const std::string& path) {
    Grammar g = parse_grammar(read_file(path));
    return g.has_repetitions() ? desugar(g) : g;
}

RegularPartition load_partition(const std::string& path) {
    if (path.empty()) throw Error("--partition is required");
    return parse_partition(read_file(path), std::filesystem::path(path).stem().string());
}

Json to_json(const StringSet& s) { return std::vector<std::string>(s.begin(), s.end()); }

Json to_json(const ClassReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"nonterminal", x.nonterminal},
                     {"alternative", x.alternative},
                     {"rest", x.rest},
                     {"rule", x.rule},
                     {"witnesses", to_json(x.witnesses)}});
    return v;
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    bool json() const { return o_.format != "text"; }

    void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

    int validate() {
        Grammar g = load_grammar(o_.file);
        auto lr = left_recursive_nonterminals(g);
        bool bnf = !g.has_predicates() && check_bnf(g).has_bnf_structure();
        const auto ts = g.terminals();
        const std::string terminals(ts.begin(), ts.end());
        if (json()) {
            emit({{"valid", true},
                  {"nonterminals", g.nonterminals()},
                  {"terminals", terminals},
                  {"predicates", g.has_predicates()},
                  {"bnf_structure", bnf},
                  {"left_recursive", std::vector<std::string>(lr.begin(), lr.end())}});
        } else {
            out_ << "valid: " << g.nonterminals().size() << " non-terminals, terminals "
                 << terminals << "\n";
            out_ << "bnf structure: " << (bnf ? "yes" : "no") << "\n";
            if (!lr.empty()) {
                out_ << "left-recursive:";
                for (const auto& n : lr) out_ << " " << n;
                out_ << "\n";
            }
        }
        return kOk;
    }

    int match() {
        Grammar g = load_grammar(o_.file);
        if (o_.input.find(kEndMarker) != std::string::npos)
            throw Error("inputs must not contain '$'; use --markers to append end markers");
        const std::string input = o_.input + std::string(o_.markers, kEndMarker);
        if (o_.sem == "peg") {
            auto r = peg_match(g, input, o_.memo ? Memo::On : Memo::Off);
            if (json()) {
                Json j{{"semantics", "peg"}, {"input", input}, {"outcome", r.failed() ? "fail" : "consumed"}};
                if (r.succeeded()) j["length"] = r.length();
                emit(j);
            } else {
                out_ << r.to_string() << "\n";
            }
            return kOk;
        }
        auto r = cfg_match(g, input);
        if (json()) {
            emit({{"semantics", "cfg"}, {"input", input}, {"consumed", std::vector<std::size_t>(r.begin(), r.end())}});
        } else if (r.empty()) {
            out_ << "no match\n";
        } else {
            out_ << "consumed {";
            bool first = true;
            for (auto l : r) out_ << (first ? "" : ", ") << l, first = false;
            out_ << "}\n";
        }
        return kOk;
    }

    int enumerate() {
        Grammar g = load_grammar(o_.file);
        LanguageOptions opts;
        opts.max_len = o_.max_len;
        opts.markers = o_.markers;
        opts.mode = o_.mode == "prefix" ? LanguageMode::Prefix : LanguageMode::Exact;
        StringSet lang = o_.sem == "peg" ? peg_language(g, opts) : cfg_language(g, opts);
        if (json()) {
            emit({{"semantics", o_.sem},
                  {"mode", o_.mode},
                  {"max_len", o_.max_len},
                  {"markers", o_.markers},
                  {"strings", to_json(lang)}});
        } else {
            out_ << format_set(lang) << "\n";
        }
        return kOk;
    }

    int analyze() {
        Grammar g = load_grammar(o_.file);
        auto t = compute_tables(g, o_.k);
        const auto& tg = t.grammar();
        if (json()) {
            Json nts = Json::object();
            for (const auto& n : tg.nonterminals()) {
                Json alts = Json::array();
                for (const auto& alt : choice_spine(tg.production(n)))
                    alts.push_back({{"alternative", render_expression(alt)}, {"first", to_json(t.first(alt))}});
                nts[n] = {{"nullable", t.nullable(n)},
                          {"first", to_json(t.first(n))},
                          {"follow", to_json(t.follow(n))},
                          {"alternatives", alts}};
            }
            emit({{"k", o_.k}, {"nonterminals", nts}});
            return kOk;
        }
        const std::string k = std::to_string(o_.k);
        out_ << "k: " << k << "\n";
        for (const auto& n : tg.nonterminals()) {
            out_ << n << "\n";
            out_ << "  nullable: " << (t.nullable(n) ? "yes" : "no") << "\n";
            out_ << "  FIRST_" << k << ": " << format_set(t.first(n)) << "\n";
            out_ << "  FOLLOW_" << k << ": " << format_set(t.follow(n)) << "\n";
            for (const auto& alt : choice_spine(tg.production(n)))
                out_ << "  " << render_expression(alt) << ": " << format_set(t.first(alt)) << "\n";
        }
        return kOk;
    }

    int check() {
        Grammar g = load_grammar(o_.file);
        if (o_.klass == "right-linear" || o_.klass == "prefix") {
            bool holds = o_.klass == "right-linear" ? is_right_linear(g) : prefix_property(g);
            return verdict(holds, ClassReport{});
        }
        if (o_.klass == "partition") {
            auto report = validate_partition(load_partition(o_.partition), g.alphabet());
            if (json()) {
                emit({{"class", o_.klass}, {"holds", report.valid}, {"problems", report.problems}});
            } else {
                out_ << (report.valid ? "holds" : "fails") << "\n";
                for (const auto& p : report.problems) out_ << "  " << p << "\n";
            }
            return report.valid ? kOk : kFails;
        }
        ClassReport r;
        if (o_.klass == "ll1") r = is_ll1(g);
        else if (o_.klass == "sllk") r = is_strong_llk(g, o_.k);
        else r = is_ll_regular(g, load_partition(o_.partition));
        return verdict(r.holds, r);
    }

    int verdict(bool holds, const ClassReport& r) {
        if (json()) {
            emit({{"class", o_.klass}, {"holds", holds}, {"violations", to_json(r)}});
        } else {
            out_ << (holds ? "holds" : "fails") << "\n";
            std::istringstream lines(describe(r));
            for (std::string line; std::getline(lines, line);) out_ << "  " << line << "\n";
        }
        return holds ? kOk : kFails;
    }

    int transform() {
        Grammar g = load_grammar(o_.file);
        auto exempt = [&](bool dflt) {
            if (o_.exempt_last.empty()) return dflt;
            return o_.exempt_last == "true";
        };
        TransformedGrammar t{g, "", 0};
        if (o_.kind == "reorder-ll1") t = {reorder_ll1(g), "reorder_ll1", 0};
        else if (o_.kind == "phi-before") t = phi_before(g, o_.k, exempt(true));
        else if (o_.kind == "phi-after") t = phi_after(g, o_.k, exempt(false));
        else if (o_.kind == "pi") t = pi_prefix(g);
        else if (o_.kind == "rho") t = rho_ll_regular(g, load_partition(o_.partition), exempt(true));
        else t = {erase_predicates(g), "erase", 0};

        const std::string text = render_transformed(t);
        if (!o_.output.empty()) {
            std::ofstream f(o_.output, std::ios::binary);
            if (!f || !(f << text)) throw Error("cannot write " + o_.output);
        }
        if (json()) {
            emit({{"transform", t.provenance}, {"marker_arity", t.marker_arity}, {"grammar", text}});
        } else if (o_.output.empty()) {
            out_ << text;
        }
        return kOk;
    }

    int compare() {
        Grammar g = load_grammar(o_.file);
        DiffReport r = o_.against.empty() ? compare_languages(g, o_.max_len, o_.markers)
                                          : compare_languages(g, load_grammar(o_.against), o_.max_len, o_.markers);
        out_ << (json() ? render_json(r) : render_text(r));
        return r.verdict == Verdict::Equal ? kOk : kFails;
    }

private:
    const Options& o_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Grammar workbench for CFG and PEG semantics", "pegcfg"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"text", "json", "json-like"}))
        ->capture_default_str();

    auto file = [&](CLI::App* sub) { sub->add_option("file", o.file, "Grammar file")->required(); };
    auto sem = [&](CLI::App* sub) {
        sub->add_option("--sem", o.sem, "Semantics")->check(CLI::IsMember({"cfg", "peg"}))->capture_default_str();
    };
    auto markers = [&](CLI::App* sub) {
        sub->add_option("--markers", o.markers, "End markers appended to every input")->capture_default_str();
    };
    auto k = [&](CLI::App* sub) {
        sub->add_option("--k", o.k, "Lookahead length")->check(CLI::PositiveNumber)->capture_default_str();
    };
    auto partition = [&](CLI::App* sub) { sub->add_option("--partition", o.partition, "Partition file"); };

    auto* validate = app.add_subcommand("validate", "Parse a grammar and report its structure");
    file(validate);

    auto* match = app.add_subcommand("match", "Match one input");
    file(match);
    sem(match);
    markers(match);
    match->add_option("--input", o.input, "Input string")->required();
    match->add_flag("--memo", o.memo, "Memoize the PEG matcher");

    auto* enumerate = app.add_subcommand("enumerate", "List the language up to a length");
    file(enumerate);
    sem(enumerate);
    markers(enumerate);
    enumerate->add_option("--max-len", o.max_len, "Longest string")->required();
    enumerate->add_option("--mode", o.mode, "exact or prefix")->check(CLI::IsMember({"exact", "prefix"}));

    auto* analyze = app.add_subcommand("analyze", "Print nullable, FIRST_k and FOLLOW_k");
    file(analyze);
    k(analyze);

    auto* check = app.add_subcommand("check", "Check a grammar class");
    file(check);
    check->add_option("--class", o.klass, "Grammar class")
        ->required()
        ->check(CLI::IsMember({"ll1", "sllk", "right-linear", "prefix", "ll-regular", "partition"}));
    k(check);
    partition(check);

    auto* transform = app.add_subcommand("transform", "Translate a grammar");
    file(transform);
    transform->add_option("--kind", o.kind, "Transformation")
        ->required()
        ->check(CLI::IsMember({"reorder-ll1", "phi-before", "phi-after", "pi", "rho", "erase"}));
    k(transform);
    partition(transform);
    transform->add_option("-o,--output", o.output, "Output file");
    transform->add_option("--exempt-last", o.exempt_last, "Leave the last alternative unguarded")
        ->check(CLI::IsMember({"true", "false"}));

    auto* compare = app.add_subcommand("compare", "Diff the CFG and PEG languages");
    file(compare);
    compare->add_option("--max-len", o.max_len, "Longest string")->required();
    markers(compare);
    compare->add_option("--against", o.against, "Read the CFG side from this grammar");

    std::vector<const char*> argv{"pegcfg"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Runner runner(o, out);
    try {
        if (*validate) return runner.validate();
        if (*match) return runner.match();
        if (*enumerate) return runner.enumerate();
        if (*analyze) return runner.analyze();
        if (*check) return runner.check();
        if (*transform) return runner.transform();
        if (*compare) return runner.compare();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace pegcfg::cli
