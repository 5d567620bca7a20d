#include "boolrank/reduction.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace boolrank {

SymmetricDigraph::SymmetricDigraph(int n_vertices,
                                   const std::vector<std::pair<int, int>>& undirected_edges)
    : n_vertices_(n_vertices) {
    if (n_vertices <= 0) {
        throw FormatError("graph must have a positive number of vertices");
    }
    if (n_vertices > kMaxDim) {
        throw CapacityError("graphs support at most " + std::to_string(kMaxDim) + " vertices");
    }
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : undirected_edges) {
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices) {
            throw FormatError("edge endpoint out of range");
        }
        if (u == v) {
            throw FormatError("self-loops are not allowed");
        }
        const auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) {
            throw FormatError("duplicate edge {" + std::to_string(u) + ", " +
                              std::to_string(v) + "}");
        }
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : edges_) {
        arcs_.push_back({u, v});
        arcs_.push_back({v, u});
    }
    std::sort(arcs_.begin(), arcs_.end());
    adjacency_.assign(static_cast<std::size_t>(n_vertices), 0);
    for (auto [u, v] : arcs_) {
        adjacency_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    }
}

bool SymmetricDigraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_vertices_ || v < 0 || v >= n_vertices_) return false;
    return (adjacency_[static_cast<std::size_t>(u)] >> v) & 1U;
}

SymmetricDigraph parse_graph(std::istream& in) {
    int n = -1;
    int declared_edges = 0;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c' || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // whitespace-only line
        if (tag == "p") {
            if (n >= 0) throw FormatError("duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> declared_edges) || kind != "edge") {
                throw FormatError("malformed problem line: " + line);
            }
            if (n <= 0) throw FormatError("graph must have a positive number of vertices");
        } else if (tag == "e") {
            if (n < 0) throw FormatError("edge before the problem line");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) throw FormatError("malformed edge line: " + line);
            if (u < 1 || u > n || v < 1 || v > n) {
                throw FormatError("edge endpoint out of range: " + line);
            }
            edges.push_back({u - 1, v - 1});
        } else {
            throw FormatError("unrecognized graph line: " + line);
        }
    }
    if (n < 0) throw FormatError("missing problem line 'p edge <n> <m>'");
    if (declared_edges != static_cast<int>(edges.size())) {
        throw FormatError("problem line declares " + std::to_string(declared_edges) +
                          " edges but " + std::to_string(edges.size()) + " were given");
    }
    return SymmetricDigraph(n, edges);
}

SymmetricDigraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

SymmetricDigraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string serialize_graph(const SymmetricDigraph& g) {
    std::string out = "p edge " + std::to_string(g.n_vertices()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    }
    return out;
}

BooleanMatrix build_reduction_matrix(const SymmetricDigraph& g) {
    const int n = g.n_vertices();
    const int a = g.arc_count();
    if (n + a > kMaxDim) {
        throw CapacityError("reduction matrix size " + std::to_string(n + a) +
                            " exceeds the " + std::to_string(kMaxDim) + " capacity");
    }
    const int size = n + a;
    BooleanMatrix m(size, size);
    for (int i = 0; i < size; ++i) m.set(i, i, true);
    for (auto [u, v] : g.arcs()) m.set(u, v, true);
    for (int t = 0; t < a; ++t) {
        const auto [tail, head] = g.arcs()[static_cast<std::size_t>(t)];
        m.set(tail, n + t, true);  // vertex row, arc column: the arc leaves x
        m.set(n + t, head, true);  // arc row, vertex column: the arc enters y
    }

    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
    for (auto [tail, head] : g.arcs()) {
        labels.push_back("a(" + std::to_string(tail) + "," + std::to_string(head) + ")");
    }
    m.set_labels(labels, labels);
    return m;
}

MisResult max_independent_set(const SymmetricDigraph& g) {
    const int n = g.n_vertices();
    if (n > kMisCutoff) {
        throw CapacityError("independent set solver supports at most " +
                            std::to_string(kMisCutoff) + " vertices");
    }
    std::uint64_t best_mask = 0;
    int best_size = 0;

    auto search = [&](auto&& self, std::uint64_t cand, std::uint64_t chosen) -> void {
        const int chosen_size = std::popcount(chosen);
        if (chosen_size + std::popcount(cand) <= best_size) return;
        if (cand == 0) {
            if (chosen_size > best_size) {
                best_size = chosen_size;
                best_mask = chosen;
            }
            return;
        }
        int pick = -1, pick_degree = -1;
        std::uint64_t scan = cand;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const int d = std::popcount(g.neighbors(v) & cand);
            if (d > pick_degree) {
                pick_degree = d;
                pick = v;
            }
        }
        const std::uint64_t bit = std::uint64_t{1} << pick;
        self(self, cand & ~g.neighbors(pick) & ~bit, chosen | bit);
        self(self, cand & ~bit, chosen);
    };

    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    search(search, all, 0);

    MisResult result;
    result.size = best_size;
    std::uint64_t scan = best_mask;
    while (scan) {
        result.vertices.push_back(std::countr_zero(scan));
        scan &= scan - 1;
    }
    return result;
}

SubmatrixSelector independent_witness_selector(const SymmetricDigraph& g,
                                               const std::vector<int>& u_set) {
    std::set<int> vertices;
    for (int v : u_set) {
        if (v < 0 || v >= g.n_vertices()) {
            throw FormatError("vertex out of range: " + std::to_string(v));
        }
        if (!vertices.insert(v).second) {
            throw FormatError("duplicate vertex: " + std::to_string(v));
        }
    }
    for (int u : vertices) {
        for (int v : vertices) {
            if (u != v && g.has_arc(u, v)) {
                throw FormatError("vertex set is not independent: arc (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ")");
            }
        }
    }
    SubmatrixSelector sel;
    for (int v : vertices) sel.rows.push_back(v);
    for (int t = 0; t < g.arc_count(); ++t) sel.rows.push_back(g.n_vertices() + t);
    sel.cols = sel.rows;
    return sel;
}

bool check_arc_pair_rule(const SymmetricDigraph& g, const std::vector<Position>& positions) {
    const int n = g.n_vertices();
    const std::set<Position> have(positions.begin(), positions.end());
    for (int t = 0; t < g.arc_count(); ++t) {
        const auto [u, v] = g.arcs()[static_cast<std::size_t>(t)];
        const int e = n + t;
        int hits = 0;
        for (int row : {e, u}) {
            for (int col : {e, v}) {
                hits += have.count({row, col});
            }
        }
        if (hits > 1) return false;
    }
    return true;
}

bool check_diagonal_independent(const SymmetricDigraph& g,
                                const std::vector<Position>& positions) {
    std::vector<int> vertices;
    for (const Position& p : positions) {
        if (p.row == p.col && p.row < g.n_vertices()) vertices.push_back(p.row);
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.has_arc(vertices[i], vertices[j])) return false;
        }
    }
    return true;
}

ReductionReport verify_reduction(const SymmetricDigraph& g) {
    if (g.n_vertices() > kHarnessVertexCutoff) {
        throw CapacityError("verification harness supports at most " +
                            std::to_string(kHarnessVertexCutoff) + " vertices");
    }
    ReductionReport report;
    const MisResult mis = max_independent_set(g);
    report.alpha = mis.size;
    report.independent_set = mis.vertices;
    report.arc_count = g.arc_count();

    const BooleanMatrix matrix = build_reduction_matrix(g);

    const FoolingResult fooling = fooling_set_number(matrix);
    report.fooling_value = fooling.value;
    report.fooling_witness = fooling.witness;
    report.fooling_nodes = fooling.nodes_explored;

    const SubmatrixSelector witness = independent_witness_selector(g, mis.vertices);
    const DetRankResult rank = determinantal_rank_sandwich(matrix, witness);
    report.detrank_lower = rank.lower_bound;
    report.detrank_witness = rank.witness;
    report.detrank_upper = rank.upper_bound;
    report.detrank_exact = rank.exact;

    const int expected = report.alpha + report.arc_count;
    report.fooling_matches = report.fooling_value == expected;
    report.detrank_matches = rank.exact && rank.value == expected;
    report.arc_pair_rule_ok = check_arc_pair_rule(g, fooling.witness);
    report.diagonal_independent_ok = check_diagonal_independent(g, fooling.witness);
    report.passed = report.fooling_matches && report.detrank_matches &&
                    report.arc_pair_rule_ok && report.diagonal_independent_ok;
    return report;
}

SymmetricDigraph random_graph(int n_vertices, double edge_probability, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n_vertices; ++u) {
        for (int v = u + 1; v < n_vertices; ++v) {
            const double draw =
                static_cast<double>(rng() >> 11) * 0x1.0p-53;  // uniform in [0, 1)
            if (draw < edge_probability) edges.push_back({u, v});
        }
    }
    return SymmetricDigraph(n_vertices, edges);
}

void write_counterexample_bundle(const std::string& directory, const SymmetricDigraph& g,
                                 const BooleanMatrix& matrix, const ReductionReport& report) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);

    std::ofstream(fs::path(directory) / "graph.col") << serialize_graph(g);
    std::ofstream(fs::path(directory) / "matrix.txt") << serialize_matrix(matrix);

    {
        std::ofstream out(fs::path(directory) / "fooling_witness.txt");
        for (const Position& p : report.fooling_witness) {
            out << p.row << ' ' << p.col << '\n';
        }
    }
    if (report.detrank_witness) {
        std::ofstream out(fs::path(directory) / "detrank_witness.txt");
        std::string rows, cols;
        for (int r : report.detrank_witness->rows) {
            rows += (rows.empty() ? "" : ",") + std::to_string(r);
        }
        for (int c : report.detrank_witness->cols) {
            cols += (cols.empty() ? "" : ",") + std::to_string(c);
        }
        out << rows << ';' << cols << '\n';
    }

    nlohmann::json summary;
    summary["n_vertices"] = g.n_vertices();
    summary["edges"] = g.edges();
    summary["alpha"] = report.alpha;
    summary["independent_set"] = report.independent_set;
    summary["arc_count"] = report.arc_count;
    summary["fooling_value"] = report.fooling_value;
    summary["detrank_lower"] = report.detrank_lower;
    summary["detrank_upper"] = report.detrank_upper;
    summary["detrank_exact"] = report.detrank_exact;
    summary["fooling_matches"] = report.fooling_matches;
    summary["detrank_matches"] = report.detrank_matches;
    summary["arc_pair_rule_ok"] = report.arc_pair_rule_ok;
    summary["diagonal_independent_ok"] = report.diagonal_independent_ok;
    summary["passed"] = report.passed;
    std::ofstream(fs::path(directory) / "summary.json") << summary.dump(2) << '\n';
}

} // namespace boolrank
