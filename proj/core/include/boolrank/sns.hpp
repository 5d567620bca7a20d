#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolrank/boolmat.hpp"

namespace boolrank {

// Permutation enumeration (with parity bookkeeping and witnesses) only runs
// up to this size; larger matrices are decided by the permanent/determinant
// criterion alone.
inline constexpr int kSnsEnumerationCutoff = 10;

// Verdict of the sign-nonsingularity test. A witness is a contributing
// permutation given as a row -> column map; its slot records its parity
// (parity of the inversion count). n_contributing is the exact number of
// contributing permutations and is filled only when enumeration ran.
struct SnsReport {
    bool verdict = false;
    std::optional<std::vector<int>> witness_even;
    std::optional<std::vector<int>> witness_odd;
    std::optional<std::uint64_t> n_contributing;
};

// Number of permutations tau with m(i, tau(i)) = 1 for all i, i.e. the
// permanent of m over the integers. Ryser inclusion-exclusion with Gray-code
// column updates; n <= 30. Overflow of the exact value past 64 bits is a
// CapacityError, never a wrapped result.
std::uint64_t permanent(const BooleanMatrix& m);

// Exact integer determinant (entries read as 0/1 integers), fraction-free.
// Throws CapacityError if the value does not fit in 64 bits.
std::int64_t signed_determinant(const BooleanMatrix& m);

// 0 = even, 1 = odd, by inversion count.
int permutation_parity(const std::vector<int>& perm);

// Sign-nonsingularity: some contributing permutation exists and all of them
// share one parity. Up to kSnsEnumerationCutoff the contributing permutations
// are enumerated outright and the result is cross-checked against the
// permanent/|determinant| criterion; above it only the criterion runs.
// Square input up to 64x64.
SnsReport is_sign_nonsingular(const BooleanMatrix& m);

// Verdict-only variant without enumeration or witness extraction, for use in
// search loops. Agrees with is_sign_nonsingular(m).verdict everywhere.
bool is_sns_quick(const BooleanMatrix& m);

namespace detail {

// Exact count of contributing permutations by branching on the scarcest
// row/column, pruning assignments that strand a row or column. Spends at
// most `budget` search nodes; returns nullopt when the budget runs out.
// Counts above the budget are impossible (each leaf costs a node), so a
// returned value is always exact.
std::optional<std::uint64_t> count_contributing_budgeted(const BooleanMatrix& m,
                                                         std::uint64_t budget);

// A contributing permutation (row -> col) if one exists: bipartite matching
// on the support of m.
std::optional<std::vector<int>> find_contributing_permutation(const BooleanMatrix& m);

} // namespace detail

} // namespace boolrank
