#pragma once

#include <cstdint>
#include <vector>

#include "boolrank/boolmat.hpp"

namespace boolrank {

// Capacity is expressed in 1-entries because the compatibility graph is
// built on those alone.
inline constexpr int kMaxFoolingOnes = 4096;

// Exact fooling set number plus the witness attaining it. nodes_explored
// counts the branch-and-bound expansions spent establishing the optimum
// (the lexicographic witness reconstruction afterwards is not included).
struct FoolingResult {
    int value = 0;
    std::vector<Position> witness;
    std::uint64_t nodes_explored = 0;
};

// Graph on the 1-entries of a matrix whose cliques are exactly its fooling
// sets: positions p = (i,j), q = (k,l) are compatible unless both cross
// entries (i,l) and (k,j) are 1. Nodes appear in row-major position order.
struct CompatibilityGraph {
    std::vector<Position> nodes;
    int word_stride = 0;
    std::vector<std::uint64_t> adjacency;  // node v's bits start at v * word_stride

    int node_count() const { return static_cast<int>(nodes.size()); }
    bool compatible(int a, int b) const {
        return (adjacency[static_cast<std::size_t>(a) * word_stride + b / 64] >> (b % 64)) & 1U;
    }
    int degree(int v) const;
    std::size_t edge_count() const;
};

// Definition check: all entries 1 and no pair with both cross entries 1.
// O(|positions|^2). Out-of-range or duplicated positions are a FormatError.
bool verify_fooling_set(const BooleanMatrix& m, const std::vector<Position>& positions);

CompatibilityGraph build_compatibility_graph(const BooleanMatrix& m);

// Exact maximum via branch and bound with a greedy-coloring upper bound.
// Among all maximum fooling sets the lexicographically smallest one in
// row-major position order is returned, so results are reproducible.
FoolingResult fooling_set_number(const BooleanMatrix& m);

} // namespace boolrank
