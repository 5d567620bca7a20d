#include "boolrank/detrank.hpp"

#include <algorithm>
#include <bit>

#include "boolrank/fooling.hpp"

namespace boolrank {

namespace {

// Next k-combination of {0..limit-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int limit) {
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

std::uint64_t index_mask(const std::vector<int>& idx) {
    std::uint64_t m = 0;
    for (int i : idx) m |= std::uint64_t{1} << i;
    return m;
}

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

void insert_sorted(std::vector<int>& sorted, int x) {
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), x), x);
}

std::optional<SubmatrixSelector> greedy_witness(const BooleanMatrix& m) {
    SubmatrixSelector current;
    while (true) {
        bool grew = false;
        for (int r = 0; r < m.n_rows() && !grew; ++r) {
            if (contains(current.rows, r)) continue;
            for (int c = 0; c < m.n_cols() && !grew; ++c) {
                if (contains(current.cols, c)) continue;
                SubmatrixSelector trial = current;
                insert_sorted(trial.rows, r);
                insert_sorted(trial.cols, c);
                if (is_sns_quick(extract_submatrix(m, trial))) {
                    current = std::move(trial);
                    grew = true;
                }
            }
        }
        if (!grew) break;
    }
    if (current.rows.empty()) return std::nullopt;
    return current;
}

} // namespace

DetRankResult determinantal_rank_exhaustive(const BooleanMatrix& m) {
    const int dim = std::min(m.n_rows(), m.n_cols());
    if (dim > kDetRankExhaustiveCutoff) {
        throw CapacityError("exhaustive rank search supports min dimension up to " +
                            std::to_string(kDetRankExhaustiveCutoff));
    }
    DetRankResult result;
    if (m.is_zero()) {
        result.value = 0;
        result.exact = true;
        return result;
    }

    for (int k = dim; k >= 1; --k) {
        std::vector<int> rows(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i;
        do {
            std::uint64_t row_union = 0;
            for (int r : rows) row_union |= m.row_word(r);
            if (std::popcount(row_union) < k) continue;

            std::vector<int> cols(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
            do {
                const std::uint64_t col_mask = index_mask(cols);
                if (col_mask & ~row_union) continue;  // an all-zero column
                bool zero_row = false;
                for (int r : rows) {
                    if ((m.row_word(r) & col_mask) == 0) {
                        zero_row = true;
                        break;
                    }
                }
                if (zero_row) continue;

                SubmatrixSelector sel{rows, cols};
                if (is_sns_quick(extract_submatrix(m, sel))) {
                    result.value = k;
                    result.lower_bound = k;
                    result.upper_bound = k;
                    result.exact = true;
                    result.witness = std::move(sel);
                    return result;
                }
            } while (next_combination(cols, m.n_cols()));
        } while (next_combination(rows, m.n_rows()));
    }
    throw std::logic_error("nonzero matrix without a 1x1 sign-nonsingular submatrix");
}

DetRankResult determinantal_rank_sandwich(
    const BooleanMatrix& m, const std::optional<SubmatrixSelector>& candidate_witness) {
    DetRankResult result;

    const FoolingResult fooling = fooling_set_number(m);
    const int dim = std::min(m.n_rows(), m.n_cols());
    if (fooling.value <= dim) {
        result.upper_bound = fooling.value;
        result.upper_source = UpperBoundSource::fooling_number;
    } else {
        result.upper_bound = dim;
        result.upper_source = UpperBoundSource::min_dimension;
    }

    if (candidate_witness) {
        if (verify_sns_witness(m, *candidate_witness)) {
            result.lower_bound = candidate_witness->size();
            result.witness = *candidate_witness;
        } else {
            result.witness_rejected = true;
        }
    }
    if (!result.witness) {
        if (auto grown = greedy_witness(m)) {
            result.lower_bound = grown->size();
            result.witness = std::move(grown);
        }
    }

    result.exact = result.lower_bound == result.upper_bound;
    if (result.exact) result.value = result.lower_bound;
    return result;
}

bool verify_sns_witness(const BooleanMatrix& m, const SubmatrixSelector& sel) {
    validate_selector(m, sel);
    if (!sel.is_square()) {
        throw FormatError("witness selector must pick a square submatrix");
    }
    return is_sns_quick(extract_submatrix(m, sel));
}

} // namespace boolrank
