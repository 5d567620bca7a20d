#include "boolrank/sns.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace boolrank {

namespace {

using int128 = __int128;
using boost::multiprecision::cpp_int;

constexpr int kRyserCutoff = 30;
// Search nodes granted to the branching permutation counter before the
// caller falls back to Ryser (or gives up above the Ryser cutoff).
constexpr std::uint64_t kBranchNodeBudget = 1u << 22;

int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw CapacityError("permanent exceeds the supported integer range");
    }
    return r;
}

int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw CapacityError("permanent exceeds the supported integer range");
    }
    return r;
}

void require_square(const BooleanMatrix& m, const char* op) {
    if (!m.is_square()) {
        throw FormatError(std::string(op) + " requires a square matrix");
    }
}

bool has_zero_row_or_col(const BooleanMatrix& m) {
    std::uint64_t col_union = 0;
    for (int r = 0; r < m.n_rows(); ++r) {
        const std::uint64_t w = m.row_word(r);
        if (w == 0) return true;
        col_union |= w;
    }
    const int n_cols = m.n_cols();
    const std::uint64_t full =
        n_cols == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_cols) - 1);
    return col_union != full;
}

// Exact integer determinant by fraction-free elimination; every intermediate
// value is a minor of the input, so the scalar type only has to hold those.
template <typename Int>
Int bareiss_determinant(const BooleanMatrix& m) {
    const int n = m.n_rows();
    std::vector<Int> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(i) * n + j] = m.get(i, j) ? 1 : 0;
        }
    }
    auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * n + j]; };

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (at(r, k) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Int(0);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Int det = at(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

// Minors of a 0/1 k x k matrix fit int64 up to k = 20 and int128 up to
// k = 44 (Hadamard bound); beyond that use arbitrary precision.
std::optional<std::uint64_t> abs_determinant_u64(const BooleanMatrix& m) {
    const int n = m.n_rows();
    if (n <= 20) {
        const std::int64_t d = bareiss_determinant<std::int64_t>(m);
        return static_cast<std::uint64_t>(d < 0 ? -d : d);
    }
    if (n <= 44) {
        const int128 d = bareiss_determinant<int128>(m);
        const unsigned __int128 mag = d < 0 ? static_cast<unsigned __int128>(-d)
                                            : static_cast<unsigned __int128>(d);
        if (mag > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        return static_cast<std::uint64_t>(mag);
    }
    cpp_int d = bareiss_determinant<cpp_int>(m);
    if (d < 0) d = -d;
    if (d > cpp_int(std::numeric_limits<std::uint64_t>::max())) return std::nullopt;
    return d.convert_to<std::uint64_t>();
}

struct EnumerationTally {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
    std::optional<std::vector<int>> first_even;
    std::optional<std::vector<int>> first_odd;
};

void enumerate_rec(const BooleanMatrix& m, int row, std::uint64_t used, int parity,
                   std::vector<int>& assign, EnumerationTally& out) {
    const int n = m.n_rows();
    if (row == n) {
        if (parity == 0) {
            if (out.even++ == 0) out.first_even = assign;
        } else {
            if (out.odd++ == 0) out.first_odd = assign;
        }
        return;
    }
    for (int r = row; r < n; ++r) {
        if ((m.row_word(r) & ~used) == 0) return;  // a later row is stranded
    }
    std::uint64_t avail = m.row_word(row) & ~used;
    while (avail) {
        const int c = std::countr_zero(avail);
        avail &= avail - 1;
        // inversions added by placing column c after the columns in `used`
        const int added =
            c >= 63 ? 0 : std::popcount(used >> (c + 1));
        assign[static_cast<std::size_t>(row)] = c;
        enumerate_rec(m, row + 1, used | (std::uint64_t{1} << c), parity ^ (added & 1), assign,
                      out);
    }
}

EnumerationTally enumerate_contributing(const BooleanMatrix& m) {
    EnumerationTally out;
    std::vector<int> assign(static_cast<std::size_t>(m.n_rows()), -1);
    enumerate_rec(m, 0, 0, 0, assign, out);
    return out;
}

struct BranchContext {
    int n = 0;
    std::array<std::uint64_t, 64> row_cols{};  // available columns per row
    std::array<std::uint64_t, 64> col_rows{};  // available rows per column
    std::uint64_t cap = 0;
    std::uint64_t nodes_left = 0;
};

// Exact count of complete assignments, capped at cap + 1. nullopt = budget out.
std::optional<std::uint64_t> branch_count(BranchContext& ctx, std::uint64_t rows_left,
                                          std::uint64_t cols_left) {
    if (ctx.nodes_left == 0) return std::nullopt;
    --ctx.nodes_left;
    if (rows_left == 0) return 1;

    int best_row = -1, best_row_n = 65;
    std::uint64_t scan = rows_left;
    while (scan) {
        const int r = std::countr_zero(scan);
        scan &= scan - 1;
        const int k = std::popcount(ctx.row_cols[static_cast<std::size_t>(r)] & cols_left);
        if (k == 0) return 0;
        if (k < best_row_n) {
            best_row_n = k;
            best_row = r;
        }
    }
    int best_col = -1, best_col_n = 65;
    scan = cols_left;
    while (scan) {
        const int c = std::countr_zero(scan);
        scan &= scan - 1;
        const int k = std::popcount(ctx.col_rows[static_cast<std::size_t>(c)] & rows_left);
        if (k == 0) return 0;
        if (k < best_col_n) {
            best_col_n = k;
            best_col = c;
        }
    }

    std::uint64_t total = 0;
    if (best_row_n <= best_col_n) {
        std::uint64_t options = ctx.row_cols[static_cast<std::size_t>(best_row)] & cols_left;
        while (options) {
            const int c = std::countr_zero(options);
            options &= options - 1;
            const auto sub = branch_count(ctx, rows_left & ~(std::uint64_t{1} << best_row),
                                          cols_left & ~(std::uint64_t{1} << c));
            if (!sub) return std::nullopt;
            total += *sub;
            if (total > ctx.cap) return ctx.cap + 1;
        }
    } else {
        std::uint64_t options = ctx.col_rows[static_cast<std::size_t>(best_col)] & rows_left;
        while (options) {
            const int r = std::countr_zero(options);
            options &= options - 1;
            const auto sub = branch_count(ctx, rows_left & ~(std::uint64_t{1} << r),
                                          cols_left & ~(std::uint64_t{1} << best_col));
            if (!sub) return std::nullopt;
            total += *sub;
            if (total > ctx.cap) return ctx.cap + 1;
        }
    }
    return total;
}

std::optional<std::uint64_t> count_capped(const BooleanMatrix& m, std::uint64_t cap,
                                          std::uint64_t budget) {
    BranchContext ctx;
    ctx.n = m.n_rows();
    ctx.cap = cap;
    ctx.nodes_left = budget;
    for (int r = 0; r < ctx.n; ++r) {
        std::uint64_t w = m.row_word(r);
        ctx.row_cols[static_cast<std::size_t>(r)] = w;
        while (w) {
            const int c = std::countr_zero(w);
            w &= w - 1;
            ctx.col_rows[static_cast<std::size_t>(c)] |= std::uint64_t{1} << r;
        }
    }
    const std::uint64_t all =
        ctx.n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << ctx.n) - 1);
    return branch_count(ctx, all, all);
}

// permanent(m) > 0 and |det(m)| = permanent(m), decided without enumerating
// permutations. Since |det| <= permanent always holds, a zero determinant
// settles the verdict immediately, and otherwise the branching counter only
// has to count up to |det| + 1.
bool criterion_decide(const BooleanMatrix& m) {
    if (has_zero_row_or_col(m)) return false;
    const int n = m.n_rows();
    const auto det = abs_determinant_u64(m);
    if (!det) {
        throw CapacityError("determinant magnitude exceeds the 64-bit range");
    }
    const std::uint64_t target = *det;
    if (target == 0) return false;
    if (n <= 12) {
        return permanent(m) == target;
    }
    if (target <= kBranchNodeBudget) {  // each counted permutation costs a node
        if (const auto count = count_capped(m, target, kBranchNodeBudget)) {
            return *count == target;
        }
    }
    if (n <= kRyserCutoff) {
        return permanent(m) == target;
    }
    throw CapacityError("sign-nonsingularity undecided within the search budget at this size");
}

} // namespace

std::uint64_t permanent(const BooleanMatrix& m) {
    require_square(m, "permanent");
    const int n = m.n_rows();
    if (n > kRyserCutoff) {
        throw CapacityError("permanent supports at most " + std::to_string(kRyserCutoff) +
                            "x" + std::to_string(kRyserCutoff) + " matrices");
    }
    if (has_zero_row_or_col(m)) return 0;

    std::array<std::uint32_t, 32> col_rows{};
    for (int i = 0; i < n; ++i) {
        std::uint64_t w = m.row_word(i);
        while (w) {
            const int j = std::countr_zero(w);
            w &= w - 1;
            col_rows[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
        }
    }

    // Gray-code walk over column subsets; the product of nonzero row sums is
    // maintained incrementally, with the zero-sum rows counted separately.
    std::array<std::int32_t, 32> row_sum{};
    int zero_rows = n;
    int128 product = 1;
    int128 total = 0;
    std::uint32_t gray = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const auto next_gray = static_cast<std::uint32_t>(k ^ (k >> 1));
        const std::uint32_t flipped = gray ^ next_gray;
        const bool added = (next_gray & flipped) != 0;
        std::uint32_t rows = col_rows[static_cast<std::size_t>(std::countr_zero(flipped))];
        while (rows) {
            const int i = std::countr_zero(rows);
            rows &= rows - 1;
            const std::int32_t old = row_sum[static_cast<std::size_t>(i)];
            const std::int32_t now = old + (added ? 1 : -1);
            row_sum[static_cast<std::size_t>(i)] = now;
            if (old == 0) {
                --zero_rows;
                product = checked_mul(product, now);
            } else if (now == 0) {
                ++zero_rows;
                product /= old;
            } else {
                product /= old;
                product = checked_mul(product, now);
            }
        }
        gray = next_gray;
        if (zero_rows == 0) {
            if ((n - std::popcount(next_gray)) & 1) {
                total = checked_add(total, -product);
            } else {
                total = checked_add(total, product);
            }
        }
    }
    if (total < 0) {
        throw std::logic_error("permanent accumulator went negative");
    }
    if (static_cast<unsigned __int128>(total) >
        std::numeric_limits<std::uint64_t>::max()) {
        throw CapacityError("permanent exceeds the 64-bit range");
    }
    return static_cast<std::uint64_t>(total);
}

std::int64_t signed_determinant(const BooleanMatrix& m) {
    require_square(m, "determinant");
    const int n = m.n_rows();
    if (n <= 20) {
        return bareiss_determinant<std::int64_t>(m);
    }
    if (n <= 44) {
        const int128 d = bareiss_determinant<int128>(m);
        if (d > std::numeric_limits<std::int64_t>::max() ||
            d < std::numeric_limits<std::int64_t>::min()) {
            throw CapacityError("determinant exceeds the 64-bit range");
        }
        return static_cast<std::int64_t>(d);
    }
    const cpp_int d = bareiss_determinant<cpp_int>(m);
    if (d > cpp_int(std::numeric_limits<std::int64_t>::max()) ||
        d < cpp_int(std::numeric_limits<std::int64_t>::min())) {
        throw CapacityError("determinant exceeds the 64-bit range");
    }
    return d.convert_to<std::int64_t>();
}

int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inversions;
        }
    }
    return inversions & 1;
}

SnsReport is_sign_nonsingular(const BooleanMatrix& m) {
    require_square(m, "sign-nonsingularity");
    const int n = m.n_rows();
    SnsReport report;

    if (has_zero_row_or_col(m)) {
        if (n <= kSnsEnumerationCutoff) report.n_contributing = 0;
        return report;
    }

    if (n <= kSnsEnumerationCutoff) {
        const EnumerationTally tally = enumerate_contributing(m);
        report.n_contributing = tally.even + tally.odd;
        report.witness_even = tally.first_even;
        report.witness_odd = tally.first_odd;
        report.verdict = (tally.even + tally.odd) > 0 && (tally.even == 0 || tally.odd == 0);

        const std::uint64_t perm_value = permanent(m);
        const auto det = abs_determinant_u64(m);
        const std::uint64_t imbalance =
            tally.even > tally.odd ? tally.even - tally.odd : tally.odd - tally.even;
        if (perm_value != tally.even + tally.odd || !det || *det != imbalance) {
            throw std::logic_error("sign-nonsingularity routes disagree");
        }
        return report;
    }

    report.verdict = criterion_decide(m);
    if (report.verdict) {
        const auto witness = detail::find_contributing_permutation(m);
        if (!witness) {
            throw std::logic_error("positive verdict without a contributing permutation");
        }
        if (permutation_parity(*witness) == 0) {
            report.witness_even = *witness;
        } else {
            report.witness_odd = *witness;
        }
    }
    return report;
}

bool is_sns_quick(const BooleanMatrix& m) {
    require_square(m, "sign-nonsingularity");
    return criterion_decide(m);
}

namespace detail {

std::optional<std::uint64_t> count_contributing_budgeted(const BooleanMatrix& m,
                                                         std::uint64_t budget) {
    require_square(m, "permutation counting");
    return count_capped(m, std::numeric_limits<std::uint64_t>::max() - 1, budget);
}

namespace {

bool kuhn_augment(const BooleanMatrix& m, int row, std::uint64_t& visited,
                  std::array<int, 64>& col_match) {
    std::uint64_t avail = m.row_word(row) & ~visited;
    // first pass: free columns, then recursive reassignment
    std::uint64_t scan = avail;
    while (scan) {
        const int c = std::countr_zero(scan);
        scan &= scan - 1;
        if (col_match[static_cast<std::size_t>(c)] < 0) {
            visited |= std::uint64_t{1} << c;
            col_match[static_cast<std::size_t>(c)] = row;
            return true;
        }
    }
    while (avail) {
        const int c = std::countr_zero(avail);
        avail &= avail - 1;
        if (visited & (std::uint64_t{1} << c)) continue;
        visited |= std::uint64_t{1} << c;
        if (kuhn_augment(m, col_match[static_cast<std::size_t>(c)], visited, col_match)) {
            col_match[static_cast<std::size_t>(c)] = row;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_contributing_permutation(const BooleanMatrix& m) {
    require_square(m, "permutation search");
    const int n = m.n_rows();
    std::array<int, 64> col_match;
    col_match.fill(-1);
    for (int r = 0; r < n; ++r) {
        std::uint64_t visited = 0;
        if (!kuhn_augment(m, r, visited, col_match)) return std::nullopt;
    }
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < n; ++c) {
        if (col_match[static_cast<std::size_t>(c)] >= 0) {
            perm[static_cast<std::size_t>(col_match[static_cast<std::size_t>(c)])] = c;
        }
    }
    return perm;
}

} // namespace detail

} // namespace boolrank
