#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pegcfg {

/// Orders strings by length, then lexicographically by character code.
struct ShortLex {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using StringSet = std::set<std::string, ShortLex>;

/// First min(k, |x|) characters of x.
inline std::string take_k(std::string_view x, std::size_t k) { return std::string(x.substr(0, k)); }

/// { take_k(xy) : x ∈ X, y ∈ Y }.
StringSet cat_k(const StringSet& xs, const StringSet& ys, std::size_t k);

StringSet set_intersection(const StringSet& a, const StringSet& b);

/// Calls `fn` on every string over `alphabet` of length ≤ max_len, in
/// short-lex order.
void for_each_string(std::string_view alphabet, std::size_t max_len,
                     const std::function<void(const std::string&)>& fn);

std::vector<std::string> all_strings(std::string_view alphabet, std::size_t max_len);

/// `eps` for the empty string, the string itself otherwise.
std::string display_string(std::string_view s);

/// `{a, ab, c}` style listing.
std::string format_set(const StringSet& s);

}  // namespace pegcfg
