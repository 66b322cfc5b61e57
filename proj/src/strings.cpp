#include "pegcfg/strings.hpp"

#include <algorithm>

namespace pegcfg {

StringSet cat_k(const StringSet& xs, const StringSet& ys, std::size_t k) {
    StringSet out;
    if (ys.empty()) return out;
    for (const auto& x : xs) {
        if (x.size() >= k) {
            out.insert(take_k(x, k));
            continue;
        }
        for (const auto& y : ys) out.insert(take_k(x + y, k));
    }
    return out;
}

StringSet set_intersection(const StringSet& a, const StringSet& b) {
    StringSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()), ShortLex{});
    return out;
}

namespace {

// Odometer step over `alphabet`; false once every position has wrapped.
bool advance(std::string& s, std::vector<std::size_t>& digits, const std::string& alphabet) {
    for (std::size_t i = s.size(); i-- > 0;) {
        if (++digits[i] < alphabet.size()) {
            s[i] = alphabet[digits[i]];
            return true;
        }
        digits[i] = 0;
        s[i] = alphabet[0];
    }
    return false;
}

}  // namespace

void for_each_string(std::string_view alphabet, std::size_t max_len,
                     const std::function<void(const std::string&)>& fn) {
    std::string sorted(alphabet);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    fn(std::string());
    if (sorted.empty()) return;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> digits(len, 0);
        std::string s(len, sorted[0]);
        do {
            fn(s);
        } while (advance(s, digits, sorted));
    }
}

std::vector<std::string> all_strings(std::string_view alphabet, std::size_t max_len) {
    std::vector<std::string> out;
    for_each_string(alphabet, max_len, [&](const std::string& s) { out.push_back(s); });
    return out;
}

std::string display_string(std::string_view s) { return s.empty() ? std::string("eps") : std::string(s); }

std::string format_set(const StringSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : s) {
        if (!first) out += ", ";
        first = false;
        out += display_string(x);
    }
    return out + "}";
}

}  // namespace pegcfg
