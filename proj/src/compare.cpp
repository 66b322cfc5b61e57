#include "pegcfg/compare.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>
#include <vector>

#include <json.hpp>

#include "pegcfg/cfg_match.hpp"
#include "pegcfg/errors.hpp"
#include "pegcfg/peg_match.hpp"

namespace pegcfg {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::CfgSuperset: return "cfg_superset";
    case Verdict::Incomparable: return "incomparable";
    }
    return "?";
}

DiffReport compare_languages(const Grammar& peg, const Grammar& cfg, std::size_t max_len, std::size_t markers) {
    require_complete(peg);
    if (cfg.has_predicates()) throw GrammarError("not a PE-CFG: the CFG side contains predicates");

    LanguageOptions opts;
    opts.markers = markers;
    std::set<char> chars;
    for (const auto* g : {&peg, &cfg})
        for (char c : enumeration_alphabet(*g, opts)) chars.insert(c);
    const auto candidates = all_strings(std::string(chars.begin(), chars.end()), max_len);
    const std::string suffix(markers, kEndMarker);

    enum : unsigned char { kCfg = 1, kPeg = 2 };
    std::vector<unsigned char> verdicts(candidates.size(), 0);
    auto work = [&](std::size_t from, std::size_t step) {
        for (std::size_t i = from; i < candidates.size(); i += step) {
            const auto& x = candidates[i];
            const std::string input = x + suffix;
            unsigned char v = 0;
            if (cfg_match(cfg, cfg.start(), input).contains(x.size())) v |= kCfg;
            auto r = peg_match(peg, peg.start(), input, Memo::On);
            if (r.succeeded() && r.length() == x.size()) v |= kPeg;
            verdicts[i] = v;
        }
    };

    std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), candidates.size() / 256 + 1));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    work(t, threads);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    DiffReport report;
    report.max_len = max_len;
    report.markers = markers;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        switch (verdicts[i]) {
        case kCfg: report.only_cfg.insert(candidates[i]); break;
        case kPeg: report.only_peg.insert(candidates[i]); break;
        case kCfg | kPeg: ++report.common; break;
        default: break;
        }
    }
    if (!report.only_peg.empty()) report.verdict = Verdict::Incomparable;
    else if (!report.only_cfg.empty()) report.verdict = Verdict::CfgSuperset;
    return report;
}

namespace {

std::string listing(const StringSet& s) {
    if (s.empty()) return "(none)";
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : " ") + display_string(x);
    return out;
}

}  // namespace

std::string render_text(const DiffReport& r) {
    return "max-len: " + std::to_string(r.max_len) + "\nmarkers: " + std::to_string(r.markers) +
           "\nverdict: " + to_string(r.verdict) + "\ncommon: " + std::to_string(r.common) +
           "\nonly-cfg: " + listing(r.only_cfg) + "\nonly-peg: " + listing(r.only_peg) + "\n";
}

std::string render_json(const DiffReport& r) {
    nlohmann::ordered_json j;
    j["max_len"] = r.max_len;
    j["markers"] = r.markers;
    j["verdict"] = to_string(r.verdict);
    j["common"] = r.common;
    j["only_cfg"] = std::vector<std::string>(r.only_cfg.begin(), r.only_cfg.end());
    j["only_peg"] = std::vector<std::string>(r.only_peg.begin(), r.only_peg.end());
    return j.dump(2) + "\n";
}

}  // namespace pegcfg
