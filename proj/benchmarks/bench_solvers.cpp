#include <benchmark/benchmark.h>

#include <random>

#include "boolrank/detrank.hpp"
#include "boolrank/fooling.hpp"
#include "boolrank/reduction.hpp"
#include "boolrank/sns.hpp"

namespace {

using namespace boolrank;

BooleanMatrix random_matrix(std::mt19937_64& rng, int n, double density) {
    BooleanMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) m.set(i, j, true);
        }
    }
    return m;
}

SymmetricDigraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return SymmetricDigraph(n, edges);
}

void BM_RyserPermanent(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const BooleanMatrix m = random_matrix(rng, static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(permanent(m));
    }
}
BENCHMARK(BM_RyserPermanent)->Arg(10)->Arg(14)->Arg(18);

void BM_SignedDeterminant(benchmark::State& state) {
    // unit lower-triangular plus noise below the diagonal: the determinant
    // stays 1 at every size while elimination still does full work
    std::mt19937_64 rng(2);
    const int n = static_cast<int>(state.range(0));
    BooleanMatrix m = BooleanMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (rng() & 1U) m.set(i, j, true);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(signed_determinant(m));
    }
}
BENCHMARK(BM_SignedDeterminant)->Arg(16)->Arg(32)->Arg(64);

void BM_SnsVerdict(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const BooleanMatrix m = random_matrix(rng, static_cast<int>(state.range(0)), 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_sns_quick(m));
    }
}
BENCHMARK(BM_SnsVerdict)->Arg(8)->Arg(12);

void BM_SnsWitnessCheck(benchmark::State& state) {
    // the harness hot path: verify the independent-set witness of A(K_n)
    const int n = static_cast<int>(state.range(0));
    const SymmetricDigraph g = complete_graph(n);
    const BooleanMatrix a = build_reduction_matrix(g);
    const SubmatrixSelector sel = independent_witness_selector(g, {0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_sns_witness(a, sel));
    }
}
BENCHMARK(BM_SnsWitnessCheck)->Arg(4)->Arg(6)->Arg(8);

void BM_FoolingCompleteGraph(benchmark::State& state) {
    const BooleanMatrix a = build_reduction_matrix(complete_graph(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fooling_set_number(a).value);
    }
}
BENCHMARK(BM_FoolingCompleteGraph)->Arg(4)->Arg(6)->Arg(8);

void BM_DetRankExhaustive(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const BooleanMatrix m = random_matrix(rng, static_cast<int>(state.range(0)), 0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(determinantal_rank_exhaustive(m).lower_bound);
    }
}
BENCHMARK(BM_DetRankExhaustive)->Arg(6)->Arg(8);

void BM_MaxIndependentSet(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const SymmetricDigraph g = random_graph(static_cast<int>(state.range(0)), 0.5, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(max_independent_set(g).size);
    }
}
BENCHMARK(BM_MaxIndependentSet)->Arg(16)->Arg(24)->Arg(32);

void BM_VerifyReduction(benchmark::State& state) {
    const SymmetricDigraph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_reduction(g).passed);
    }
}
BENCHMARK(BM_VerifyReduction)->Arg(4)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
