#pragma once

#include <cstdint>
#include <vector>

#include "pegcfg/generator.hpp"

namespace suite {

/// `count` grammars drawn with consecutive seeds starting at `first_seed`.
inline std::vector<pegcfg::Grammar> grammars(pegcfg::GrammarClass c, std::size_t count, std::uint64_t first_seed = 1,
                                             std::size_t k = 2) {
    std::vector<pegcfg::Grammar> out;
    for (std::size_t i = 0; i < count; ++i) {
        pegcfg::GeneratorConfig cfg;
        cfg.seed = first_seed + i;
        cfg.constraint = c;
        cfg.k = k;
        out.push_back(pegcfg::random_grammar(cfg));
    }
    return out;
}

}  // namespace suite
