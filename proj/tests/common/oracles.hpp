#pragma once

// Brute-force reference implementations used as test oracles. Everything
// here works straight off BooleanMatrix::get and deliberately shares no
// code with the solvers under test.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "boolrank/boolmat.hpp"

namespace oracle {

using boolrank::BooleanMatrix;
using boolrank::Position;
using boolrank::SubmatrixSelector;

struct PermTally {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
};

namespace detail {

inline void walk_permutations(const BooleanMatrix& m, int row, std::vector<int>& cols,
                              std::vector<bool>& used, int inversions, PermTally& out) {
    const int n = m.n_rows();
    if (row == n) {
        if (inversions % 2 == 0) {
            ++out.even;
        } else {
            ++out.odd;
        }
        return;
    }
    for (int c = 0; c < n; ++c) {
        if (used[static_cast<std::size_t>(c)] || !m.get(row, c)) continue;
        int added = 0;
        for (int r = 0; r < row; ++r) {
            if (cols[static_cast<std::size_t>(r)] > c) ++added;
        }
        used[static_cast<std::size_t>(c)] = true;
        cols[static_cast<std::size_t>(row)] = c;
        walk_permutations(m, row + 1, cols, used, inversions + added, out);
        used[static_cast<std::size_t>(c)] = false;
    }
}

} // namespace detail

// Counts of contributing permutations by parity, by plain enumeration.
inline PermTally permutation_tally(const BooleanMatrix& m) {
    PermTally out;
    std::vector<int> cols(static_cast<std::size_t>(m.n_rows()), -1);
    std::vector<bool> used(static_cast<std::size_t>(m.n_rows()), false);
    detail::walk_permutations(m, 0, cols, used, 0, out);
    return out;
}

inline std::uint64_t permanent(const BooleanMatrix& m) {
    const PermTally t = permutation_tally(m);
    return t.even + t.odd;
}

inline std::int64_t determinant(const BooleanMatrix& m) {
    const PermTally t = permutation_tally(m);
    return static_cast<std::int64_t>(t.even) - static_cast<std::int64_t>(t.odd);
}

inline bool sign_nonsingular(const BooleanMatrix& m) {
    const PermTally t = permutation_tally(m);
    return (t.even + t.odd) > 0 && (t.even == 0 || t.odd == 0);
}

// Definition check written out directly: every entry 1, and for s != t not
// both cross entries are 1.
inline bool fooling_set_ok(const BooleanMatrix& m, const std::vector<Position>& ps) {
    for (const Position& p : ps) {
        if (!m.get(p.row, p.col)) return false;
    }
    for (std::size_t s = 0; s < ps.size(); ++s) {
        for (std::size_t t = s + 1; t < ps.size(); ++t) {
            if (m.get(ps[s].row, ps[t].col) && m.get(ps[t].row, ps[s].col)) return false;
        }
    }
    return true;
}

namespace detail {

inline bool next_combination(std::vector<int>& c, int limit) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < limit - (k - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

} // namespace detail

// Maximum fooling set size by subset enumeration over the 1-positions.
// Two positions sharing a row or column violate the pair condition, so no
// fooling set can exceed min(n_rows, n_cols).
inline int fooling_number(const BooleanMatrix& m) {
    std::vector<Position> ones;
    for (int i = 0; i < m.n_rows(); ++i) {
        for (int j = 0; j < m.n_cols(); ++j) {
            if (m.get(i, j)) ones.push_back({i, j});
        }
    }
    const int cap = std::min({static_cast<int>(ones.size()), m.n_rows(), m.n_cols()});
    for (int k = cap; k >= 1; --k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<Position> subset;
            for (int i : pick) subset.push_back(ones[static_cast<std::size_t>(i)]);
            if (fooling_set_ok(m, subset)) return k;
        } while (detail::next_combination(pick, static_cast<int>(ones.size())));
    }
    return 0;
}

// The lexicographically smallest maximum fooling set in row-major position
// order (positions are generated row-major, so combinations arrive in
// lexicographic order already).
inline std::vector<Position> lexmin_max_fooling_set(const BooleanMatrix& m) {
    std::vector<Position> ones;
    for (int i = 0; i < m.n_rows(); ++i) {
        for (int j = 0; j < m.n_cols(); ++j) {
            if (m.get(i, j)) ones.push_back({i, j});
        }
    }
    const int value = fooling_number(m);
    if (value == 0) return {};
    std::vector<int> pick(static_cast<std::size_t>(value));
    for (int i = 0; i < value; ++i) pick[static_cast<std::size_t>(i)] = i;
    do {
        std::vector<Position> subset;
        for (int i : pick) subset.push_back(ones[static_cast<std::size_t>(i)]);
        if (fooling_set_ok(m, subset)) return subset;
    } while (detail::next_combination(pick, static_cast<int>(ones.size())));
    return {};
}

// Largest k admitting a sign-nonsingular k x k submatrix, by enumerating
// every square selector.
inline int determinantal_rank(const BooleanMatrix& m) {
    const int cap = std::min(m.n_rows(), m.n_cols());
    for (int k = cap; k >= 1; --k) {
        std::vector<int> rows(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<int> cols(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
            do {
                if (sign_nonsingular(
                        extract_submatrix(m, SubmatrixSelector{rows, cols}))) {
                    return k;
                }
            } while (detail::next_combination(cols, m.n_cols()));
        } while (detail::next_combination(rows, m.n_rows()));
    }
    return 0;
}

// Deterministic random 0/1 matrix; density is the probability of a 1.
inline BooleanMatrix random_matrix(std::mt19937_64& rng, int n_rows, int n_cols,
                                   double density) {
    BooleanMatrix m(n_rows, n_cols);
    for (int i = 0; i < n_rows; ++i) {
        for (int j = 0; j < n_cols; ++j) {
            const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < density) m.set(i, j, true);
        }
    }
    return m;
}

} // namespace oracle
