#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "asmlat/asm.hpp"
#include "asmlat/cover_table.hpp"
#include "asmlat/enumeration.hpp"
#include "asmlat/statistics.hpp"

namespace asmlat {

struct HasseNode {
    Asm matrix;
    StatRecord stats;
    bool join_irreducible = false;
};

/// Cover from nodes[lower] to nodes[upper].
struct HasseEdge {
    std::size_t lower = 0;
    std::size_t upper = 0;
    int r = 0;
    int s = 0;
    int type = 0;
    CoverDeltas deltas;
};

struct HasseGraph {
    int n = 0;
    std::vector<HasseNode> nodes;  // enumeration order
    std::vector<HasseEdge> edges;  // sorted by (lower, r, s)
};

HasseGraph build_hasse(int n, std::uint64_t guard = kDefaultGuard);

/// One-line permutation for permutation matrices, flat_string otherwise.
std::string node_label(const Asm& a);

/// Graphviz text. Join-irreducible nodes get style=filled when `highlight_ji`.
std::string to_dot(const HasseGraph& g, bool highlight_ji);

}  // namespace asmlat
