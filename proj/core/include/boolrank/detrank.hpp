#pragma once

#include <optional>

#include "boolrank/boolmat.hpp"
#include "boolrank/sns.hpp"

namespace boolrank {

// Exhaustive submatrix search is feasible up to this min-dimension.
inline constexpr int kDetRankExhaustiveCutoff = 12;

enum class UpperBoundSource {
    fooling_number,
    min_dimension,
};

// Determinantal rank, either exact (value set, lower == upper) or as a
// lower/upper sandwich. The witness, when present, selects a square
// sign-nonsingular submatrix of size lower_bound.
struct DetRankResult {
    std::optional<int> value;
    int lower_bound = 0;
    std::optional<SubmatrixSelector> witness;
    int upper_bound = 0;
    std::optional<UpperBoundSource> upper_source;
    bool exact = false;
    bool witness_rejected = false;  // a supplied candidate failed verification
};

// Searches sizes descending from min(n_rows, n_cols); within a size, row and
// column subsets in lexicographic order, so the reported witness is the
// lexicographically smallest one (row set first, then column set).
DetRankResult determinantal_rank_exhaustive(const BooleanMatrix& m);

// Lower bound from a verified witness (supplied, or grown greedily first-fit
// in index order), upper bound from the fooling set number. Exact when the
// two meet. A candidate that fails verification is reported as rejected and
// the computation continues without it.
DetRankResult determinantal_rank_sandwich(
    const BooleanMatrix& m,
    const std::optional<SubmatrixSelector>& candidate_witness = std::nullopt);

// True iff the selected square submatrix is sign-nonsingular.
bool verify_sns_witness(const BooleanMatrix& m, const SubmatrixSelector& sel);

} // namespace boolrank
