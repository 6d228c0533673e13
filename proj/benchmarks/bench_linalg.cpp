#include "bicross/modmatrix.hpp"
#include "bicross/barcomplex.hpp"
#include "bicross/presentation.hpp"
#include "bicross/smith.hpp"

#include <benchmark/benchmark.h>

using namespace bicross;

namespace {

IntMatrix random_int_matrix(int n, unsigned seed) {
    IntMatrix m(n, n);
    unsigned long long s = seed;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            m.at(i, j) = static_cast<long>((s >> 33) % 19) - 9;
        }
    return m;
}

Mat64 random_mod_matrix(int rows, int cols, i64 m, unsigned seed) {
    Mat64 a(rows, cols);
    unsigned long long s = seed;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            a.at(i, j) = static_cast<i64>((s >> 33) % static_cast<unsigned long long>(m));
        }
    return a;
}

} // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
    IntMatrix m = random_int_matrix(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(8)->Arg(10);

static void BM_HowellKernel(benchmark::State& state) {
    Mat64 a = random_mod_matrix(static_cast<int>(state.range(0)) * 3,
                                static_cast<int>(state.range(0)), 12, 7);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_mod(a, 12));
}
BENCHMARK(BM_HowellKernel)->Arg(16)->Arg(64);

// the artifact's solve_mod workload: coboundary membership against a
// genuine bar differential
static void BM_SolveMod(benchmark::State& state) {
    FiniteGroup g = FiniteGroup::symmetric(3);
    GroupCochainComplex cx(g, CoefficientModule::trivial(6), 2);
    const Mat64& d1 = cx.differential(1);
    std::vector<i64> gvec(cx.rank(1), 0);
    gvec[0] = 1;
    std::vector<i64> b = d1.apply_mod(gvec, 6);
    for (auto _ : state) benchmark::DoNotOptimize(solve_mod(d1, b, 6));
}
BENCHMARK(BM_SolveMod);
