// Command-line front end for the Boolean matrix rank solvers.
//
// Exit codes: 0 success, 1 falsified verification verdict or invalid
// witness, 2 input/format errors, 3 capacity errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolrank/boolmat.hpp"
#include "boolrank/detrank.hpp"
#include "boolrank/fooling.hpp"
#include "boolrank/reduction.hpp"
#include "boolrank/sns.hpp"

namespace {

using boolrank::BooleanMatrix;
using boolrank::Position;
using boolrank::SubmatrixSelector;
using boolrank::SymmetricDigraph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw boolrank::FormatError("empty index in list: " + text);
        try {
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            throw boolrank::FormatError("invalid index '" + item + "'");
        }
    }
    if (out.empty()) throw boolrank::FormatError("empty index list");
    return out;
}

// "r1,r2,...;c1,c2,..." with 0-based strictly increasing indices.
SubmatrixSelector parse_selector(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos) {
        throw boolrank::FormatError("selector must look like \"r1,r2;c1,c2\"");
    }
    SubmatrixSelector sel;
    sel.rows = parse_index_list(text.substr(0, semi));
    sel.cols = parse_index_list(text.substr(semi + 1));
    return sel;
}

// Lines "i j" with 0-based indices; '#' comments and blank lines ignored.
std::vector<Position> parse_positions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw boolrank::FormatError("cannot open positions file: " + path);
    std::vector<Position> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Position p;
        if (!(ls >> p.row >> p.col)) {
            throw boolrank::FormatError("malformed position line: " + line);
        }
        out.push_back(p);
    }
    return out;
}

json selector_to_json(const SubmatrixSelector& sel) {
    return json{{"rows", sel.rows}, {"cols", sel.cols}};
}

json positions_to_json(const std::vector<Position>& positions) {
    json arr = json::array();
    for (const Position& p : positions) arr.push_back({p.row, p.col});
    return arr;
}

json sns_report_to_json(const boolrank::SnsReport& report) {
    json j;
    j["verdict"] = report.verdict;
    if (report.n_contributing) j["n_contributing"] = *report.n_contributing;
    if (report.witness_even) j["witness_even"] = *report.witness_even;
    if (report.witness_odd) j["witness_odd"] = *report.witness_odd;
    return j;
}

void print_permutation(std::ostream& os, const char* name, const std::vector<int>& perm) {
    os << name << ":";
    for (int c : perm) os << ' ' << c;
    os << '\n';
}

int cmd_sns(const std::string& matrix_path, bool as_json) {
    const BooleanMatrix m = boolrank::parse_matrix_file(matrix_path);
    const boolrank::SnsReport report = boolrank::is_sign_nonsingular(m);
    if (as_json) {
        std::cout << sns_report_to_json(report).dump(2) << '\n';
    } else {
        std::cout << "verdict: " << (report.verdict ? "sign-nonsingular" : "not sign-nonsingular")
                  << '\n';
        if (report.n_contributing) {
            std::cout << "contributing permutations: " << *report.n_contributing << '\n';
        }
        if (report.witness_even) print_permutation(std::cout, "witness (even)", *report.witness_even);
        if (report.witness_odd) print_permutation(std::cout, "witness (odd)", *report.witness_odd);
    }
    return kExitOk;
}

int cmd_permanent(const std::string& matrix_path, bool as_json) {
    const BooleanMatrix m = boolrank::parse_matrix_file(matrix_path);
    const std::uint64_t value = boolrank::permanent(m);
    if (as_json) {
        std::cout << json{{"permanent", value}}.dump(2) << '\n';
    } else {
        std::cout << value << '\n';
    }
    return kExitOk;
}

int cmd_det(const std::string& matrix_path, bool as_json) {
    const BooleanMatrix m = boolrank::parse_matrix_file(matrix_path);
    const std::int64_t value = boolrank::signed_determinant(m);
    if (as_json) {
        std::cout << json{{"determinant", value}}.dump(2) << '\n';
    } else {
        std::cout << value << '\n';
    }
    return kExitOk;
}

json detrank_to_json(const boolrank::DetRankResult& result, const std::string& mode) {
    json j;
    j["mode"] = mode;
    if (result.value) j["value"] = *result.value;
    j["lower_bound"] = result.lower_bound;
    j["upper_bound"] = result.upper_bound;
    if (result.upper_source) {
        j["upper_source"] = *result.upper_source == boolrank::UpperBoundSource::fooling_number
                                ? "fooling-number"
                                : "min-dimension";
    }
    j["exact"] = result.exact;
    j["witness_rejected"] = result.witness_rejected;
    if (result.witness) j["witness"] = selector_to_json(*result.witness);
    return j;
}

int cmd_detrank(const std::string& matrix_path, const std::string& mode,
                const std::string& witness_text, bool as_json) {
    const BooleanMatrix m = boolrank::parse_matrix_file(matrix_path);
    std::optional<SubmatrixSelector> candidate;
    if (!witness_text.empty()) candidate = parse_selector(witness_text);

    boolrank::DetRankResult result;
    if (mode == "exhaustive") {
        if (candidate) {
            throw boolrank::FormatError("--witness only applies to --mode sandwich");
        }
        result = boolrank::determinantal_rank_exhaustive(m);
    } else if (mode == "sandwich") {
        result = boolrank::determinantal_rank_sandwich(m, candidate);
    } else {
        throw boolrank::FormatError("unknown mode: " + mode);
    }

    if (as_json) {
        std::cout << detrank_to_json(result, mode).dump(2) << '\n';
    } else {
        if (result.value) {
            std::cout << "determinantal rank: " << *result.value << '\n';
        } else {
            std::cout << "determinantal rank in [" << result.lower_bound << ", "
                      << result.upper_bound << "]\n";
        }
        if (result.witness) {
            std::cout << "witness rows:";
            for (int r : result.witness->rows) std::cout << ' ' << r;
            std::cout << "\nwitness cols:";
            for (int c : result.witness->cols) std::cout << ' ' << c;
            std::cout << '\n';
        }
        if (result.witness_rejected) {
            std::cout << "supplied witness rejected: submatrix is not sign-nonsingular\n";
        }
    }
    return result.witness_rejected ? kExitFalsified : kExitOk;
}

int cmd_fooling(const std::string& matrix_path, const std::string& verify_path, bool as_json) {
    const BooleanMatrix m = boolrank::parse_matrix_file(matrix_path);
    if (!verify_path.empty()) {
        const std::vector<Position> positions = parse_positions_file(verify_path);
        const bool valid = boolrank::verify_fooling_set(m, positions);
        if (as_json) {
            std::cout << json{{"valid", valid}, {"size", positions.size()}}.dump(2) << '\n';
        } else {
            std::cout << (valid ? "valid fooling set" : "not a fooling set") << " (size "
                      << positions.size() << ")\n";
        }
        return valid ? kExitOk : kExitFalsified;
    }

    const boolrank::FoolingResult result = boolrank::fooling_set_number(m);
    if (as_json) {
        json j;
        j["value"] = result.value;
        j["witness"] = positions_to_json(result.witness);
        j["nodes_explored"] = result.nodes_explored;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "fooling set number: " << result.value << '\n';
        std::cout << "witness:";
        for (const Position& p : result.witness) {
            std::cout << " (" << p.row << "," << p.col << ")";
        }
        std::cout << '\n';
        std::cout << "nodes explored: " << result.nodes_explored << '\n';
    }
    return kExitOk;
}

int cmd_reduce(const std::string& graph_path, const std::string& out_path, bool as_json) {
    const SymmetricDigraph g = boolrank::parse_graph_file(graph_path);
    const BooleanMatrix m = boolrank::build_reduction_matrix(g);
    std::string payload;
    if (as_json) {
        json j;
        j["n_vertices"] = g.n_vertices();
        j["arc_count"] = g.arc_count();
        j["n"] = m.n_rows();
        std::vector<std::string> rows;
        for (int r = 0; r < m.n_rows(); ++r) {
            std::string row;
            for (int c = 0; c < m.n_cols(); ++c) row += m.get(r, c) ? '1' : '0';
            rows.push_back(row);
        }
        j["rows"] = rows;
        j["row_labels"] = m.row_labels();
        j["col_labels"] = m.col_labels();
        payload = j.dump(2) + "\n";
    } else {
        payload = boolrank::serialize_matrix(m);
    }
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw boolrank::FormatError("cannot open output file: " + out_path);
        out << payload;
    }
    return kExitOk;
}

int cmd_mis(const std::string& graph_path, bool as_json) {
    const SymmetricDigraph g = boolrank::parse_graph_file(graph_path);
    const boolrank::MisResult result = boolrank::max_independent_set(g);
    if (as_json) {
        std::cout << json{{"alpha", result.size}, {"vertices", result.vertices}}.dump(2) << '\n';
    } else {
        std::cout << "maximum independent set size: " << result.size << '\n';
        std::cout << "vertices:";
        for (int v : result.vertices) std::cout << ' ' << v;
        std::cout << '\n';
    }
    return kExitOk;
}

json reduction_report_to_json(const SymmetricDigraph& g, const boolrank::ReductionReport& r) {
    json j;
    j["n_vertices"] = g.n_vertices();
    j["edges"] = g.edges();
    j["alpha"] = r.alpha;
    j["independent_set"] = r.independent_set;
    j["arc_count"] = r.arc_count;
    j["fooling_value"] = r.fooling_value;
    j["fooling_witness"] = positions_to_json(r.fooling_witness);
    j["fooling_nodes"] = r.fooling_nodes;
    j["detrank_lower"] = r.detrank_lower;
    j["detrank_upper"] = r.detrank_upper;
    j["detrank_exact"] = r.detrank_exact;
    j["fooling_matches"] = r.fooling_matches;
    j["detrank_matches"] = r.detrank_matches;
    j["arc_pair_rule_ok"] = r.arc_pair_rule_ok;
    j["diagonal_independent_ok"] = r.diagonal_independent_ok;
    j["passed"] = r.passed;
    return j;
}

struct HarnessOptions {
    std::string graph_path;
    int enumerate_n = 0;
    int random_count = 0;
    int max_n = boolrank::kHarnessVertexCutoff;
    std::uint64_t seed = 1;
    std::string dump_dir = "counterexamples";
};

void describe_graph_line(std::ostream& os, std::size_t index, std::size_t total,
                         const SymmetricDigraph& g, const boolrank::ReductionReport& r) {
    os << "graph " << index << "/" << total << ": n=" << g.n_vertices()
       << " m=" << g.edge_count() << " alpha=" << r.alpha << " arcs=" << r.arc_count
       << " fooling=" << r.fooling_value << " detrank=" << r.detrank_lower << ".."
       << r.detrank_upper << (r.passed ? " ok" : " FAIL") << '\n';
}

int run_harness_over(const std::vector<SymmetricDigraph>& graphs, const HarnessOptions& opt,
                     bool as_json, const std::optional<std::uint64_t>& seed_used) {
    std::size_t failures = 0;
    json graph_records = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const SymmetricDigraph& g = graphs[i];
        const boolrank::ReductionReport report = boolrank::verify_reduction(g);
        if (as_json) {
            graph_records.push_back(reduction_report_to_json(g, report));
        } else {
            describe_graph_line(std::cout, i + 1, graphs.size(), g, report);
        }
        if (!report.passed) {
            ++failures;
            const std::string dir = opt.dump_dir + "/case_" + std::to_string(i);
            boolrank::write_counterexample_bundle(dir, g, boolrank::build_reduction_matrix(g),
                                                  report);
            std::cerr << "verification failed; counterexample bundle written to " << dir << '\n';
        }
    }
    if (as_json) {
        json j;
        if (seed_used) j["seed"] = *seed_used;
        j["graphs"] = graph_records;
        j["total"] = graphs.size();
        j["failures"] = failures;
        j["all_pass"] = failures == 0;
        std::cout << j.dump(2) << '\n';
    } else {
        if (seed_used) std::cout << "seed: " << *seed_used << '\n';
        std::cout << (graphs.size() - failures) << "/" << graphs.size() << " graphs passed\n";
    }
    return failures == 0 ? kExitOk : kExitFalsified;
}

int cmd_verify_theorem(const HarnessOptions& opt, bool as_json) {
    std::vector<SymmetricDigraph> graphs;
    std::optional<std::uint64_t> seed_used;

    const int modes = (!opt.graph_path.empty() ? 1 : 0) + (opt.enumerate_n > 0 ? 1 : 0) +
                      (opt.random_count > 0 ? 1 : 0);
    if (modes != 1) {
        throw boolrank::FormatError(
            "choose exactly one of --graph, --enumerate-n, --random");
    }

    if (!opt.graph_path.empty()) {
        graphs.push_back(boolrank::parse_graph_file(opt.graph_path));
    } else if (opt.enumerate_n > 0) {
        const int n = opt.enumerate_n;
        if (n > 6) {
            throw boolrank::CapacityError(
                "exhaustive enumeration supports at most 6 vertices; use --random");
        }
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
        }
        const std::uint64_t total = std::uint64_t{1} << slots.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if ((mask >> s) & 1U) edges.push_back(slots[s]);
            }
            graphs.emplace_back(n, edges);
        }
    } else {
        if (opt.max_n < 1 || opt.max_n > boolrank::kHarnessVertexCutoff) {
            throw boolrank::FormatError("--max-n must be between 1 and " +
                                        std::to_string(boolrank::kHarnessVertexCutoff));
        }
        std::mt19937_64 rng(opt.seed);
        seed_used = opt.seed;
        for (int i = 0; i < opt.random_count; ++i) {
            const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opt.max_n));
            const double p = 0.1 + 0.8 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
            graphs.push_back(boolrank::random_graph(n, p, rng));
        }
    }
    return run_harness_over(graphs, opt, as_json, seed_used);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for Boolean matrix rank functions"};
    app.require_subcommand(1);

    std::string matrix_path, graph_path, out_path, witness_text, verify_path;
    std::string mode = "exhaustive";
    bool as_json = false;
    HarnessOptions harness;

    auto* sns = app.add_subcommand("sns", "Decide sign-nonsingularity of a square matrix");
    sns->add_option("--matrix", matrix_path, "matrix file")->required();
    sns->add_flag("--json", as_json, "emit JSON");

    auto* perm = app.add_subcommand("permanent", "Permanent of a square 0/1 matrix");
    perm->add_option("--matrix", matrix_path, "matrix file")->required();
    perm->add_flag("--json", as_json, "emit JSON");

    auto* det = app.add_subcommand("det", "Exact integer determinant");
    det->add_option("--matrix", matrix_path, "matrix file")->required();
    det->add_flag("--json", as_json, "emit JSON");

    auto* detrank = app.add_subcommand("detrank", "Determinantal rank of a matrix");
    detrank->add_option("--matrix", matrix_path, "matrix file")->required();
    detrank->add_option("--mode", mode, "exhaustive|sandwich")->default_val("exhaustive");
    detrank->add_option("--witness", witness_text,
                        "candidate selector \"r1,r2;c1,c2\" (sandwich mode)");
    detrank->add_flag("--json", as_json, "emit JSON");

    auto* fooling = app.add_subcommand("fooling", "Fooling set number of a matrix");
    fooling->add_option("--matrix", matrix_path, "matrix file")->required();
    fooling->add_option("--verify", verify_path, "positions file to verify instead");
    fooling->add_flag("--json", as_json, "emit JSON");

    auto* reduce = app.add_subcommand("reduce", "Build the rank-instance matrix of a graph");
    reduce->add_option("--graph", graph_path, "DIMACS graph file")->required();
    reduce->add_option("--out", out_path, "output file (default: stdout)");
    reduce->add_flag("--json", as_json, "emit JSON");

    auto* mis = app.add_subcommand("mis", "Maximum independent set of a graph");
    mis->add_option("--graph", graph_path, "DIMACS graph file")->required();
    mis->add_flag("--json", as_json, "emit JSON");

    auto* verify = app.add_subcommand(
        "verify-theorem", "Check fooling = detrank = alpha + arcs on constructed matrices");
    verify->add_option("--graph", harness.graph_path, "single DIMACS graph file");
    verify->add_option("--enumerate-n", harness.enumerate_n,
                       "all labeled graphs on this many vertices");
    verify->add_option("--random", harness.random_count, "number of random graphs");
    verify->add_option("--max-n", harness.max_n, "max vertices for random graphs");
    verify->add_option("--seed", harness.seed, "random seed (echoed in the output)");
    verify->add_option("--dump-dir", harness.dump_dir,
                       "directory for counterexample bundles");
    verify->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sns->parsed()) return cmd_sns(matrix_path, as_json);
        if (perm->parsed()) return cmd_permanent(matrix_path, as_json);
        if (det->parsed()) return cmd_det(matrix_path, as_json);
        if (detrank->parsed()) return cmd_detrank(matrix_path, mode, witness_text, as_json);
        if (fooling->parsed()) return cmd_fooling(matrix_path, verify_path, as_json);
        if (reduce->parsed()) return cmd_reduce(graph_path, out_path, as_json);
        if (mis->parsed()) return cmd_mis(graph_path, as_json);
        if (verify->parsed()) return cmd_verify_theorem(harness, as_json);
    } catch (const boolrank::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const boolrank::FormatError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
