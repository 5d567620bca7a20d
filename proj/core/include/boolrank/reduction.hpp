#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "boolrank/boolmat.hpp"
#include "boolrank/detrank.hpp"
#include "boolrank/fooling.hpp"

namespace boolrank {

inline constexpr int kMisCutoff = 32;
inline constexpr int kHarnessVertexCutoff = 8;

// Directed graph whose arc set is closed under reversal: each undirected
// edge {u, v} is stored as the two arcs (u, v) and (v, u). No self-loops,
// no duplicates. Arcs are kept sorted lexicographically by (tail, head).
class SymmetricDigraph {
public:
    SymmetricDigraph(int n_vertices, const std::vector<std::pair<int, int>>& undirected_edges);

    int n_vertices() const { return n_vertices_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_arc(int u, int v) const;
    std::uint64_t neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

private:
    int n_vertices_;
    std::vector<std::pair<int, int>> edges_;  // (min, max), sorted
    std::vector<std::pair<int, int>> arcs_;   // both directions, sorted
    std::vector<std::uint64_t> adjacency_;
};

// DIMACS-style input: 'c' comment lines, one "p edge <n> <m>" header, then
// "e <u> <v>" lines with 1-based endpoints; each undirected edge expands to
// both arcs.
SymmetricDigraph parse_graph(std::istream& in);
SymmetricDigraph parse_graph(const std::string& text);
SymmetricDigraph parse_graph_file(const std::string& path);

std::string serialize_graph(const SymmetricDigraph& g);

// Square matrix indexed by vertices (input order) followed by arcs (sorted
// by tail then head). Entry (x, y) is 1 when
//   (a) x = y,
//   (b) x and y are vertices joined by an arc,
//   (c) x is a vertex and y is an arc whose tail is x, or
//   (d) x is an arc whose head is the vertex y;
// everything else is 0, in particular all off-diagonal arc-arc entries. The
// transposed variants of (c)/(d) (arc head in the vertex row, arc tail in
// the vertex column) deliberately stay 0. Labels name the indices
// ("v<i>" and "a(<tail>,<head>)").
BooleanMatrix build_reduction_matrix(const SymmetricDigraph& g);

struct MisResult {
    int size = 0;
    std::vector<int> vertices;
};

// Exact maximum independent set by branch and bound over vertex masks.
MisResult max_independent_set(const SymmetricDigraph& g);

// Selector over build_reduction_matrix(g) picking rows/columns U union all
// arcs, for use as a determinantal-rank witness. u_set must be independent.
SubmatrixSelector independent_witness_selector(const SymmetricDigraph& g,
                                               const std::vector<int>& u_set);

// Per-graph record tying the independence number, arc count, fooling set
// number and determinantal rank together with the identity they are
// expected to satisfy: fooling = detrank = alpha + arc_count.
struct ReductionReport {
    int alpha = 0;
    std::vector<int> independent_set;
    int arc_count = 0;
    int fooling_value = 0;
    std::vector<Position> fooling_witness;
    std::uint64_t fooling_nodes = 0;
    int detrank_lower = 0;
    std::optional<SubmatrixSelector> detrank_witness;
    int detrank_upper = 0;
    bool detrank_exact = false;
    bool fooling_matches = false;
    bool detrank_matches = false;
    bool arc_pair_rule_ok = false;
    bool diagonal_independent_ok = false;
    bool passed = false;
};

// Runs every solver against A(g) and fills all verdicts. A false verdict is
// a reportable failure, never ignored. n_vertices <= kHarnessVertexCutoff.
ReductionReport verify_reduction(const SymmetricDigraph& g);

// For every arc e = (u, v), a fooling set of A(g) meets the four index
// pairs {e,u} x {e,v} in at most one position.
bool check_arc_pair_rule(const SymmetricDigraph& g, const std::vector<Position>& positions);

// The vertices w with (w, w) among the positions form an independent set.
bool check_diagonal_independent(const SymmetricDigraph& g,
                                const std::vector<Position>& positions);

// Erdos-Renyi sample; the raw engine draws are mapped to edges without
// distribution objects so a seed reproduces the same graph everywhere.
SymmetricDigraph random_graph(int n_vertices, double edge_probability, std::mt19937_64& rng);

// Directory with the graph, the matrix, both witnesses and a JSON summary,
// dumped when a verification verdict fails.
void write_counterexample_bundle(const std::string& directory, const SymmetricDigraph& g,
                                 const BooleanMatrix& matrix, const ReductionReport& report);

} // namespace boolrank
