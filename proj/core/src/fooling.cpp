#include "boolrank/fooling.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace boolrank {

int CompatibilityGraph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < word_stride; ++w) {
        d += std::popcount(adjacency[static_cast<std::size_t>(v) * word_stride + w]);
    }
    return d;
}

std::size_t CompatibilityGraph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < node_count(); ++v) {
        twice += static_cast<std::size_t>(degree(v));
    }
    return twice / 2;
}

bool verify_fooling_set(const BooleanMatrix& m, const std::vector<Position>& positions) {
    std::set<Position> seen;
    for (const Position& p : positions) {
        if (p.row < 0 || p.row >= m.n_rows() || p.col < 0 || p.col >= m.n_cols()) {
            throw FormatError("position out of range: (" + std::to_string(p.row) + ", " +
                              std::to_string(p.col) + ")");
        }
        if (!seen.insert(p).second) {
            throw FormatError("duplicate position: (" + std::to_string(p.row) + ", " +
                              std::to_string(p.col) + ")");
        }
    }
    for (const Position& p : positions) {
        if (!m.get(p.row, p.col)) return false;
    }
    for (std::size_t s = 0; s < positions.size(); ++s) {
        for (std::size_t t = s + 1; t < positions.size(); ++t) {
            if (m.get(positions[s].row, positions[t].col) &&
                m.get(positions[t].row, positions[s].col)) {
                return false;
            }
        }
    }
    return true;
}

CompatibilityGraph build_compatibility_graph(const BooleanMatrix& m) {
    CompatibilityGraph g;
    for (int i = 0; i < m.n_rows(); ++i) {
        for (int j = 0; j < m.n_cols(); ++j) {
            if (m.get(i, j)) g.nodes.push_back({i, j});
        }
    }
    const int n = g.node_count();
    g.word_stride = (n + 63) / 64;
    g.adjacency.assign(static_cast<std::size_t>(n) * g.word_stride, 0);
    auto link = [&](int a, int b) {
        g.adjacency[static_cast<std::size_t>(a) * g.word_stride + b / 64] |=
            std::uint64_t{1} << (b % 64);
    };
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const Position& p = g.nodes[static_cast<std::size_t>(a)];
            const Position& q = g.nodes[static_cast<std::size_t>(b)];
            if (!(m.get(p.row, q.col) && m.get(q.row, p.col))) {
                link(a, b);
                link(b, a);
            }
        }
    }
    return g;
}

namespace {

// Candidate sets are bit masks of word_stride words; all set algebra below
// is word-parallel.
using Mask = std::vector<std::uint64_t>;

class CliqueSearch {
public:
    explicit CliqueSearch(const CompatibilityGraph& g)
        : g_(g), n_(g.node_count()), words_(g.word_stride) {
        rank_order_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) rank_order_[static_cast<std::size_t>(v)] = v;
        std::stable_sort(rank_order_.begin(), rank_order_.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
    }

    int maximum_size() {
        Mask all(static_cast<std::size_t>(words_), 0);
        for (int v = 0; v < n_; ++v) set_bit(all, v);
        best_ = greedy_clique_size(all);
        expand(all, 0);
        return best_;
    }

    std::uint64_t nodes_explored() const { return nodes_; }

    // Lexicographically smallest maximum clique in node-index order: walk the
    // node indices ascending and force every node that still extends to a
    // clique of the target size. Cheap implications (greedy accept, coloring
    // reject) settle most nodes before the exact decision search runs.
    std::vector<int> lexmin_members(int target) {
        std::vector<int> chosen;
        if (target == 0) return chosen;
        Mask cand(static_cast<std::size_t>(words_), 0);
        for (int v = 0; v < n_; ++v) set_bit(cand, v);

        int v = first_bit(cand);
        while (static_cast<int>(chosen.size()) < target) {
            if (v < 0) {
                throw std::logic_error("maximum clique reconstruction lost its target");
            }
            const int need = target - static_cast<int>(chosen.size()) - 1;
            Mask sub = and_of(cand, row(v));
            clear_below(sub, v + 1);  // members of a sorted clique only grow
            bool extendable = false;
            if (count(sub) >= need) {
                if (greedy_clique_size(sub) >= need) {
                    extendable = true;
                } else {
                    std::vector<int> order, bound;
                    color_sort(sub, order, bound);
                    if (!bound.empty() && bound.back() >= need) {
                        extendable = clique_exists(sub, need);
                    }
                }
            }
            if (extendable) {
                chosen.push_back(v);
                cand = std::move(sub);
                v = first_bit(cand);
            } else {
                v = next_bit(cand, v);
            }
        }
        return chosen;
    }

private:
    const CompatibilityGraph& g_;
    int n_;
    int words_;
    std::vector<int> rank_order_;  // descending compatibility degree
    int best_ = 0;
    std::uint64_t nodes_ = 0;

    const std::uint64_t* row(int v) const {
        return g_.adjacency.data() + static_cast<std::size_t>(v) * words_;
    }
    static void set_bit(Mask& m, int v) { m[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64); }
    static void clear_bit(Mask& m, int v) { m[static_cast<std::size_t>(v / 64)] &= ~(std::uint64_t{1} << (v % 64)); }
    static bool test_bit(const Mask& m, int v) { return (m[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1U; }
    Mask and_of(const Mask& a, const std::uint64_t* b) const {
        Mask out(static_cast<std::size_t>(words_));
        for (int w = 0; w < words_; ++w) out[static_cast<std::size_t>(w)] = a[static_cast<std::size_t>(w)] & b[w];
        return out;
    }
    int count(const Mask& m) const {
        int c = 0;
        for (std::uint64_t w : m) c += std::popcount(w);
        return c;
    }
    static void clear_below(Mask& m, int limit) {
        // clears bits < limit
        const int full = limit / 64;
        for (int w = 0; w < full; ++w) m[static_cast<std::size_t>(w)] = 0;
        if (full < static_cast<int>(m.size()) && (limit % 64) != 0) {
            m[static_cast<std::size_t>(full)] &= ~((std::uint64_t{1} << (limit % 64)) - 1);
        }
    }
    int first_bit(const Mask& m) const {
        for (int w = 0; w < words_; ++w) {
            if (m[static_cast<std::size_t>(w)]) {
                return w * 64 + std::countr_zero(m[static_cast<std::size_t>(w)]);
            }
        }
        return -1;
    }
    int next_bit(const Mask& m, int after) const {
        // smallest set bit strictly greater than `after`
        int w = (after + 1) / 64;
        if (w >= words_) return -1;
        std::uint64_t word = m[static_cast<std::size_t>(w)] >> ((after + 1) % 64);
        if (word) return after + 1 + std::countr_zero(word);
        for (++w; w < words_; ++w) {
            if (m[static_cast<std::size_t>(w)]) {
                return w * 64 + std::countr_zero(m[static_cast<std::size_t>(w)]);
            }
        }
        return -1;
    }

    // Largest clique reachable by always taking the lowest-index compatible
    // node; a cheap lower bound and the warm start for the search.
    int greedy_clique_size(const Mask& from) const {
        Mask cand = from;
        int size = 0;
        int v = first_bit(cand);
        while (v >= 0) {
            ++size;
            cand = and_of(cand, row(v));
            clear_below(cand, v + 1);
            v = first_bit(cand);
        }
        return size;
    }

    // Greedy coloring of the candidate set, scanning nodes by descending
    // compatibility degree. Classes are independent sets, so a clique takes
    // at most one node per class; emitting class by class makes
    // bound[i] = color(order[i]) nondecreasing.
    void color_sort(const Mask& cand, std::vector<int>& order, std::vector<int>& bound) const {
        std::vector<Mask> class_masks;
        std::vector<std::vector<int>> class_nodes;
        for (int v : rank_order_) {
            if (!test_bit(cand, v)) continue;
            std::size_t k = 0;
            for (; k < class_masks.size(); ++k) {
                bool conflict = false;
                const std::uint64_t* adj = row(v);
                for (int w = 0; w < words_; ++w) {
                    if (class_masks[k][static_cast<std::size_t>(w)] & adj[w]) {
                        conflict = true;
                        break;
                    }
                }
                if (!conflict) break;
            }
            if (k == class_masks.size()) {
                class_masks.emplace_back(static_cast<std::size_t>(words_), 0);
                class_nodes.emplace_back();
            }
            set_bit(class_masks[k], v);
            class_nodes[k].push_back(v);
        }
        order.clear();
        bound.clear();
        for (std::size_t k = 0; k < class_nodes.size(); ++k) {
            for (int v : class_nodes[k]) {
                order.push_back(v);
                bound.push_back(static_cast<int>(k) + 1);
            }
        }
    }

    void expand(const Mask& cand, int depth) {
        ++nodes_;
        std::vector<int> order, bound;
        color_sort(cand, order, bound);
        if (order.empty()) {
            best_ = std::max(best_, depth);
            return;
        }
        Mask rest = cand;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (depth + bound[static_cast<std::size_t>(i)] <= best_) return;
            const int v = order[static_cast<std::size_t>(i)];
            clear_bit(rest, v);
            const Mask next = and_of(rest, row(v));
            if (count(next) == 0) {
                best_ = std::max(best_, depth + 1);
            } else {
                expand(next, depth + 1);
            }
        }
    }

    bool clique_exists(const Mask& cand, int need) {
        if (need <= 0) return true;
        if (count(cand) < need) return false;
        if (greedy_clique_size(cand) >= need) return true;
        std::vector<int> order, bound;
        color_sort(cand, order, bound);
        Mask rest = cand;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (bound[static_cast<std::size_t>(i)] < need) return false;
            const int v = order[static_cast<std::size_t>(i)];
            clear_bit(rest, v);
            if (clique_exists(and_of(rest, row(v)), need - 1)) return true;
        }
        return false;
    }
};

} // namespace

FoolingResult fooling_set_number(const BooleanMatrix& m) {
    if (m.count_ones() > static_cast<std::uint64_t>(kMaxFoolingOnes)) {
        throw CapacityError("matrix has more than " + std::to_string(kMaxFoolingOnes) +
                            " one-entries");
    }
    FoolingResult result;
    if (m.is_zero()) return result;

    const CompatibilityGraph g = build_compatibility_graph(m);
    CliqueSearch search(g);
    result.value = search.maximum_size();
    result.nodes_explored = search.nodes_explored();
    for (int v : search.lexmin_members(result.value)) {
        result.witness.push_back(g.nodes[static_cast<std::size_t>(v)]);
    }
    return result;
}

} // namespace boolrank
