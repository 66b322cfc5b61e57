#pragma once

#include "pegcfg/grammar_text.hpp"
#include "pegcfg/partition.hpp"

namespace fixtures {

inline pegcfg::Grammar g1() {
    return pegcfg::parse_grammar(R"(start: S
S -> A B
A -> 'a' 'b' 'a' | 'a'
B -> 'b'
)");
}

inline pegcfg::Grammar g2() {
    return pegcfg::parse_grammar(R"(start: S
S -> A | B
A -> 'a' 'b' | C
B -> 'a' | C 'd'
C -> 'c'
)");
}

/// G2 with the alternatives of S swapped.
inline pegcfg::Grammar g2_swapped() {
    return pegcfg::parse_grammar(R"(start: S
S -> B | A
A -> 'a' 'b' | C
B -> 'a' | C 'd'
C -> 'c'
)");
}

inline pegcfg::Grammar g3() { return pegcfg::parse_grammar("start: S\nS -> 'a' | eps\n"); }

inline pegcfg::Grammar g4() { return pegcfg::parse_grammar("start: S\nS -> 'a' | 'a' 'a'\n"); }

inline pegcfg::Grammar g5() {
    return pegcfg::parse_grammar(R"(start: S
S -> A | B
A -> 'a' A | 'c'
B -> 'a' B | 'd'
)");
}

inline constexpr const char* kComplementBlock = R"(start: R
R -> 'a' R | '$' | 'c' X | 'd' X
X -> 'a' W | 'c' W | 'd' W
W -> 'a' W | 'c' W | 'd' W | '$'
)";

/// a*c$, a*d$ and the rest of {a,c,d}*$.
inline pegcfg::RegularPartition pi_g5() {
    return pegcfg::parse_partition(std::string(R"(block B1:
start: P
P -> 'a' P | 'c' '$'
block B2:
start: Q
Q -> 'a' Q | 'd' '$'
block B3:
)") + kComplementBlock);
}

/// pi_g5 with B1 and B2 each split by whether the input starts with 'a'.
inline pegcfg::RegularPartition pi_g5_refined() {
    return pegcfg::parse_partition(std::string(R"(block C0:
start: P
P -> 'c' '$'
block C1:
start: P
P -> 'a' Q
Q -> 'a' Q | 'c' '$'
block D0:
start: P
P -> 'd' '$'
block D1:
start: P
P -> 'a' Q
Q -> 'a' Q | 'd' '$'
block B3:
)") + kComplementBlock);
}

/// B2 = a*(c|d)$ overlaps B1 = a*c$.
inline pegcfg::RegularPartition pi_g5_overlapping() {
    return pegcfg::parse_partition(std::string(R"(block B1:
start: P
P -> 'a' P | 'c' '$'
block B2:
start: Q
Q -> 'a' Q | 'c' '$' | 'd' '$'
block B3:
)") + kComplementBlock);
}

/// The single block {a,c,d}*$.
inline pegcfg::RegularPartition pi_trivial() {
    return pegcfg::parse_partition(R"(block U:
start: U
U -> 'a' U | 'c' U | 'd' U | '$'
)");
}

}  // namespace fixtures
