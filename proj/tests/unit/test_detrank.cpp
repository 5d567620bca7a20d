#include <doctest.h>

#include <random>

#include "boolrank/detrank.hpp"
#include "boolrank/fooling.hpp"
#include "boolrank/reduction.hpp"
#include "oracles.hpp"

using namespace boolrank;

namespace {

const BooleanMatrix kGolden =
    BooleanMatrix::from_rows({"1110", "1101", "0110", "1001"});

} // namespace

TEST_CASE("exhaustive rank on known matrices") {
    CHECK(determinantal_rank_exhaustive(BooleanMatrix::identity(3)).value == 3);
    CHECK(determinantal_rank_exhaustive(BooleanMatrix::from_rows({"111", "111", "111"})).value == 1);
    CHECK(determinantal_rank_exhaustive(kGolden).value == 3);

    const DetRankResult zero = determinantal_rank_exhaustive(BooleanMatrix(3, 3));
    CHECK(zero.value == 0);
    CHECK(zero.exact);
    CHECK_FALSE(zero.witness.has_value());
}

TEST_CASE("exhaustive rank handles rectangular input") {
    const BooleanMatrix wide = BooleanMatrix::from_rows({"10101", "01010"});
    const DetRankResult r = determinantal_rank_exhaustive(wide);
    CHECK(r.value == 2);
}

TEST_CASE("exhaustive rank rejects oversized input") {
    CHECK_THROWS_AS(determinantal_rank_exhaustive(BooleanMatrix::identity(13)), CapacityError);
}

TEST_CASE("exhaustive rank agrees with the selector-enumeration oracle") {
    std::mt19937_64 rng(201);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 5);
        const int c = 1 + static_cast<int>(rng() % 5);
        const BooleanMatrix m = oracle::random_matrix(rng, r, c, 0.25 + 0.1 * (trial % 6));
        CHECK(determinantal_rank_exhaustive(m).value == oracle::determinantal_rank(m));
    }
}

TEST_CASE("exhaustive witness is sign-nonsingular and lexicographically first") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 40; ++trial) {
        const BooleanMatrix m = oracle::random_matrix(rng, 4, 4, 0.5);
        const DetRankResult r = determinantal_rank_exhaustive(m);
        if (*r.value == 0) continue;
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->size() == *r.value);
        CHECK(verify_sns_witness(m, *r.witness));

        // no witness of the same size sorts before the reported one
        const int k = *r.value;
        std::vector<int> rows(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i;
        bool done = false;
        do {
            std::vector<int> cols(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
            do {
                const SubmatrixSelector sel{rows, cols};
                if (std::pair(rows, cols) >= std::pair(r.witness->rows, r.witness->cols)) {
                    done = true;
                    break;
                }
                CHECK_FALSE(oracle::sign_nonsingular(extract_submatrix(m, sel)));
            } while (oracle::detail::next_combination(cols, m.n_cols()));
        } while (!done && oracle::detail::next_combination(rows, m.n_rows()));
    }
}

TEST_CASE("verify_sns_witness on the worked examples") {
    CHECK(verify_sns_witness(kGolden, {{0, 2, 3}, {0, 2, 3}}));
    CHECK_FALSE(verify_sns_witness(kGolden, {{0, 1}, {0, 1}}));
    CHECK(verify_sns_witness(BooleanMatrix::identity(4), {{1, 3}, {1, 3}}));
    CHECK_THROWS_AS(verify_sns_witness(kGolden, {{0, 1}, {0, 1, 2}}), FormatError);
    CHECK_THROWS_AS(verify_sns_witness(kGolden, {{0, 9}, {0, 1}}), FormatError);
}

TEST_CASE("sandwich with a valid witness is exact when bounds meet") {
    const DetRankResult id = determinantal_rank_sandwich(
        BooleanMatrix::identity(3), SubmatrixSelector{{0, 1, 2}, {0, 1, 2}});
    CHECK(id.exact);
    CHECK(id.value == 3);
    CHECK(id.upper_source == UpperBoundSource::fooling_number);

    // worked instance: triangle graph, one vertex plus all six arcs
    const SymmetricDigraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    const BooleanMatrix a = build_reduction_matrix(k3);
    const SubmatrixSelector witness = independent_witness_selector(k3, {0});
    CHECK(witness.size() == 7);
    CHECK(verify_sns_witness(a, witness));
    const DetRankResult r = determinantal_rank_sandwich(a, witness);
    CHECK(r.lower_bound == 7);
    CHECK(r.upper_bound == 7);
    CHECK(r.exact);
    CHECK(r.value == 7);
}

TEST_CASE("sandwich without a witness falls back to greedy growth") {
    const DetRankResult r = determinantal_rank_sandwich(BooleanMatrix::from_rows({"11", "11"}));
    CHECK(r.lower_bound == 1);
    CHECK(r.upper_bound == 1);
    CHECK(r.exact);
    CHECK(r.value == 1);
}

TEST_CASE("sandwich reports a rejected witness and continues") {
    const DetRankResult r = determinantal_rank_sandwich(
        kGolden, SubmatrixSelector{{0, 1}, {0, 1}});  // 2x2 all-ones block
    CHECK(r.witness_rejected);
    CHECK(r.lower_bound == 3);  // greedy still finds a full witness
    CHECK(r.upper_bound == 3);
    CHECK(r.exact);
}

TEST_CASE("sandwich rejects malformed witnesses outright") {
    CHECK_THROWS_AS(
        determinantal_rank_sandwich(kGolden, SubmatrixSelector{{0, 1}, {0, 1, 2}}),
        FormatError);
}

TEST_CASE("sandwich on the zero matrix") {
    const DetRankResult r = determinantal_rank_sandwich(BooleanMatrix(2, 2));
    CHECK(r.value == 0);
    CHECK(r.exact);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("exhaustive value lies inside the sandwich bounds") {
    std::mt19937_64 rng(203);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const BooleanMatrix m = oracle::random_matrix(rng, n, n, 0.4);
        const DetRankResult exact = determinantal_rank_exhaustive(m);
        const DetRankResult bounds = determinantal_rank_sandwich(m);
        CHECK(bounds.lower_bound <= *exact.value);
        CHECK(*exact.value <= bounds.upper_bound);
    }
}

TEST_CASE("fooling number bounds the rank from above") {
    std::mt19937_64 rng(204);
    for (int trial = 0; trial < 50; ++trial) {
        const BooleanMatrix m = oracle::random_matrix(rng, 6, 6, 0.35 + 0.1 * (trial % 4));
        CHECK(fooling_set_number(m).value >= *determinantal_rank_exhaustive(m).value);
    }
}

TEST_CASE("smaller sign-nonsingular submatrices exist below a larger one") {
    // downward closure justifies stopping the descending search at the first hit
    std::mt19937_64 rng(205);
    auto closed_downward = [](const BooleanMatrix& m) {
        const int cap = std::min(m.n_rows(), m.n_cols());
        std::vector<bool> exists(static_cast<std::size_t>(cap) + 1, false);
        for (int k = 1; k <= cap; ++k) {
            std::vector<int> rows(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i;
            do {
                std::vector<int> cols(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
                do {
                    if (oracle::sign_nonsingular(
                            extract_submatrix(m, SubmatrixSelector{rows, cols}))) {
                        exists[static_cast<std::size_t>(k)] = true;
                        break;
                    }
                } while (oracle::detail::next_combination(cols, m.n_cols()));
                if (exists[static_cast<std::size_t>(k)]) break;
            } while (oracle::detail::next_combination(rows, m.n_rows()));
        }
        for (int k = cap; k >= 2; --k) {
            if (exists[static_cast<std::size_t>(k)] && !exists[static_cast<std::size_t>(k - 1)]) {
                return false;
            }
        }
        return true;
    };
    for (int trial = 0; trial < 30; ++trial) {
        CHECK(closed_downward(oracle::random_matrix(rng, 6, 6, 0.4)));
    }
}

TEST_CASE("sandwich bounds are ordered and witnesses match the lower bound") {
    std::mt19937_64 rng(207);
    for (int trial = 0; trial < 60; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 6);
        const int c = 1 + static_cast<int>(rng() % 6);
        const BooleanMatrix m = oracle::random_matrix(rng, r, c, 0.15 + 0.12 * (trial % 6));
        const DetRankResult bounds = determinantal_rank_sandwich(m);
        CHECK(bounds.lower_bound <= bounds.upper_bound);
        CHECK(bounds.exact == (bounds.lower_bound == bounds.upper_bound));
        if (bounds.witness) {
            CHECK(bounds.witness->size() == bounds.lower_bound);
            CHECK(verify_sns_witness(m, *bounds.witness));
        } else {
            CHECK(bounds.lower_bound == 0);
        }
        if (bounds.value) CHECK(*bounds.value == bounds.lower_bound);
    }
}

TEST_CASE("rank is invariant under row and column permutations") {
    std::mt19937_64 rng(206);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const BooleanMatrix m = oracle::random_matrix(rng, n, n, 0.45);
        std::vector<int> rp(static_cast<std::size_t>(n)), cp(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) rp[static_cast<std::size_t>(i)] = cp[static_cast<std::size_t>(i)] = i;
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        BooleanMatrix shuffled(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                shuffled.set(i, j, m.get(rp[static_cast<std::size_t>(i)], cp[static_cast<std::size_t>(j)]));
            }
        }
        CHECK(*determinantal_rank_exhaustive(m).value ==
              *determinantal_rank_exhaustive(shuffled).value);
    }
}
