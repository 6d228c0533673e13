#include "bicross/barcomplex.hpp"
#include "bicross/kac.hpp"
#include "bicross/mpcomplex.hpp"

#include <benchmark/benchmark.h>

using namespace bicross;

namespace {

GroupMatchedPair inversion_pair(int n_order) {
    FiniteGroup t = FiniteGroup::cyclic(2);
    FiniteGroup n = FiniteGroup::cyclic(n_order);
    std::vector<std::vector<int>> al(2), ar(2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < n_order; ++b) {
            al[a].push_back(a == 0 ? b : (n_order - b) % n_order);
            ar[a].push_back(a);
        }
    return GroupMatchedPair::validate(t, n, al, ar);
}

} // namespace

static void BM_GroupCohomologyH2(benchmark::State& state) {
    FiniteGroup g = FiniteGroup::symmetric(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(group_cohomology(g, CoefficientModule::trivial(6), 2));
}
BENCHMARK(BM_GroupCohomologyH2);

static void BM_BarDifferentialD4(benchmark::State& state) {
    FiniteGroup g = FiniteGroup::dihedral(4);
    for (auto _ : state) {
        GroupCochainComplex cx(g, CoefficientModule::trivial(6), 3);
        benchmark::DoNotOptimize(cx.differential(2));
    }
}
BENCHMARK(BM_BarDifferentialD4);

static void BM_MatchedPairH2(benchmark::State& state) {
    auto mp = inversion_pair(3);
    for (auto _ : state) benchmark::DoNotOptimize(matched_pair_cohomology(mp, 6, 2));
}
BENCHMARK(BM_MatchedPairH2);

static void BM_KacVerifyS3(benchmark::State& state) {
    auto mp = inversion_pair(3);
    for (auto _ : state) benchmark::DoNotOptimize(verify_kac_exactness(mp, 6));
}
BENCHMARK(BM_KacVerifyS3);
