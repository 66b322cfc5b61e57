#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pegcfg/automaton.hpp"
#include "pegcfg/grammar.hpp"

namespace pegcfg {

struct PartitionBlock {
    std::string name;
    Grammar grammar;  // right-linear, over T ∪ {$}
    Dfa dfa;
};

/// An ordered family of named blocks meant to partition T*·{$}.
class RegularPartition {
public:
    /// Throws GrammarError if a block is not right-linear or a name repeats.
    RegularPartition(std::vector<std::pair<std::string, Grammar>> blocks, std::string name = "pi");

    const std::vector<PartitionBlock>& blocks() const noexcept { return blocks_; }
    const std::string& name() const noexcept { return name_; }
    /// Index of the block with this name, or npos.
    std::size_t find(std::string_view block) const;
    /// Terminals used by any block, without `$`.
    std::string alphabet() const;

private:
    std::vector<PartitionBlock> blocks_;
    std::string name_;
};

/// Reads `block NAME:` sections, each holding a right-linear grammar with
/// its own `start:` line. `$` is allowed inside blocks.
RegularPartition parse_partition(std::string_view text, std::string name = "pi");
std::string render_partition(const RegularPartition& p);

struct PartitionReport {
    bool valid = true;
    /// One line per problem, each with a shortest witness string.
    std::vector<std::string> problems;
};

/// Checks exactly, on the product automaton, that the blocks are pairwise
/// disjoint, that their union is T*·{$}, and that no block strays outside
/// it. T is the blocks' terminals plus `alphabet`.
PartitionReport validate_partition(const RegularPartition& p, std::string_view alphabet = {});

/// Blocks x·T*·$ for every x ∈ T^k and x·$ for every shorter x: the classes
/// of the k-symbol lookahead. Blocks are named P1, P2, … in short-lex order
/// of x.
RegularPartition prefix_classes_partition(std::string_view alphabet, std::size_t k);

}  // namespace pegcfg
