#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bicross/errors.hpp"
#include "bicross/presentation.hpp"
#include "bicross/smith.hpp"
#include "test_helpers.hpp"

using namespace bicross;
using testutil::Lcg;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

Mat64 mat_from_rows(const std::vector<std::vector<i64>>& rows) {
    Mat64 m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

void check_snf(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.U * s.Uinv == IntMatrix::identity(m.rows()));
    CHECK(s.V * s.Vinv == IntMatrix::identity(m.cols()));
    mpz_class du = s.U.det(), dv = s.V.det();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    int n = std::min(m.rows(), m.cols());
    for (int i = 0; i + 1 < n; ++i) {
        if (s.D.at(i + 1, i + 1) == 0) continue;
        CHECK(s.D.at(i, i) != 0);
        CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
    }
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j) CHECK(s.D.at(i, j) == 0);
}

} // namespace

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
    IntMatrix m = from_rows({{2, 0}, {0, 3}});
    SmithForm s = smith_normal_form(m);
    CHECK(s.D.at(0, 0) == 1);
    CHECK(s.D.at(1, 1) == 6);
    check_snf(m);
}

TEST_CASE("smith normal form of zero and identity") {
    IntMatrix z = IntMatrix::zero(3, 4);
    SmithForm sz = smith_normal_form(z);
    CHECK(sz.D.is_zero());
    CHECK(sz.U == IntMatrix::identity(3));
    CHECK(sz.V == IntMatrix::identity(4));

    IntMatrix id = IntMatrix::identity(4);
    SmithForm si = smith_normal_form(id);
    CHECK(si.D == id);
    check_snf(id);
}

TEST_CASE("smith normal form on random matrices") {
    Lcg rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int r = static_cast<int>(rng.range(1, 5));
        int c = static_cast<int>(rng.range(1, 5));
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rng.range(-9, 9);
        check_snf(m);
    }
}

TEST_CASE("smith normal form is deterministic") {
    IntMatrix m = from_rows({{6, 4, 2}, {4, 0, 8}, {2, 8, 6}});
    SmithForm a = smith_normal_form(m);
    SmithForm b = smith_normal_form(m);
    CHECK(a.D == b.D);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
}

TEST_CASE("howell kernel matches brute force over composite moduli") {
    Lcg rng(777);
    for (i64 m : {2, 4, 6, 12}) {
        for (int trial = 0; trial < 25; ++trial) {
            int rows = static_cast<int>(rng.range(1, 3));
            int cols = static_cast<int>(rng.range(1, 3));
            Mat64 a = testutil::random_mat(rng, rows, cols, 0, m - 1);
            auto gens = kernel_mod(a, m);
            auto span = testutil::brute_span(gens, cols, m);
            auto brute = testutil::brute_kernel(a, m);
            CHECK(span == brute);
        }
    }
}

TEST_CASE("howell membership and canonical equality") {
    // subgroup of (Z/4)^2 generated by (2,0) and (0,2), two generator orders
    std::vector<std::vector<i64>> g1 = {{2, 0}, {0, 2}};
    std::vector<std::vector<i64>> g2 = {{2, 2}, {0, 2}};
    HowellForm h1 = rowspace_howell(g1, 2, 4);
    HowellForm h2 = rowspace_howell(g2, 4 == 4 ? 2 : 2, 4);
    CHECK(h1 == h2); // same span
    CHECK(h1.span_size() == 4);
    CHECK(h1.spans({2, 2}));
    CHECK(!h1.spans({1, 0}));
}

TEST_CASE("homology_at: zero differentials give free module") {
    Mat64 d_in(3, 0);
    Mat64 d_out(0, 3);
    Presentation p = homology_at(d_in, d_out, 6);
    REQUIRE(p.invariant_factors().size() == 3);
    for (const auto& f : p.invariant_factors()) CHECK(f == 6);
}

TEST_CASE("homology_at: multiplication by 2 on Z/4 leaves Z/2") {
    Mat64 d_in = mat_from_rows({{2}});
    Mat64 d_out(0, 1);
    Presentation p = homology_at(d_in, d_out, 4);
    REQUIRE(p.invariant_factors().size() == 1);
    CHECK(p.invariant_factors()[0] == 2);
    // reduce is additive and kills the image
    auto r1 = p.reduce({1});
    auto r2 = p.reduce({2});
    CHECK(r1.size() == 1);
    CHECK(r2[0] == 0);
    auto r3 = p.reduce({3});
    CHECK((r1[0] + r2[0] - r3[0]) % 2 == 0);
}

TEST_CASE("homology_at: identity image gives trivial group") {
    Mat64 d_in = Mat64::identity(2);
    Mat64 d_out(0, 2);
    Presentation p = homology_at(d_in, d_out, 6);
    CHECK(p.is_trivial());
    CHECK(p.order() == 1);
}

TEST_CASE("homology_at rejects non-complexes") {
    Mat64 d_in = Mat64::identity(1);
    Mat64 d_out = Mat64::identity(1);
    CHECK_THROWS_AS(homology_at(d_in, d_out, 4), AlgebraError);
}

TEST_CASE("homology_at generator contract") {
    // d_in: Z/12 x -> (4x, 0); d_out: (a,b) -> 6a + 6b gives
    // ker/im = {(a,b): 6a+6b=0} / <(4,0)>
    Mat64 d_in = mat_from_rows({{4}, {0}});
    Mat64 d_out = mat_from_rows({{6, 6}});
    Presentation p = homology_at(d_in, d_out, 12);
    for (const auto& g : p.generators()) {
        auto img = d_out.apply_mod(g, 12);
        CHECK(img[0] == 0);
    }
    // reduce of every image element vanishes
    for (i64 x = 0; x < 12; ++x) {
        std::vector<i64> v = {mod_reduce(4 * x, 12), 0};
        auto r = p.reduce(v);
        for (const auto& c : r) CHECK(c == 0);
    }
    // reduce(gen_i) = e_i
    for (int i = 0; i < p.num_generators(); ++i) {
        auto r = p.reduce(p.generators()[i]);
        for (int j = 0; j < p.num_generators(); ++j) CHECK(r[j] == (i == j ? 1 : 0));
    }
}

TEST_CASE("homology_at with mixed moduli") {
    // middle module Z/2 + Z/4, no differentials: factors are (2,4)
    DiagModule mid;
    mid.moduli = {2, 4};
    Mat64 d_in(2, 0);
    Mat64 d_out(0, 2);
    Presentation p = homology_at(d_in, d_out, DiagModule{}, mid, DiagModule{});
    REQUIRE(p.invariant_factors().size() == 2);
    CHECK(p.invariant_factors()[0] == 2);
    CHECK(p.invariant_factors()[1] == 4);
}

TEST_CASE("solve_mod examples") {
    Mat64 id = Mat64::identity(3);
    auto x = solve_mod(id, {1, 2, 3}, 4);
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<i64>{1, 2, 3});

    Mat64 two = mat_from_rows({{2}});
    CHECK(!solve_mod(two, {1}, 4).has_value());
    auto y = solve_mod(two, {2}, 4);
    REQUIRE(y.has_value());
    CHECK((*y)[0] == 1);
}

TEST_CASE("solve_mod agrees with brute force and with the howell solver") {
    Lcg rng(424242);
    for (i64 m : {2, 4, 6, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            int rows = static_cast<int>(rng.range(1, 3));
            int cols = static_cast<int>(rng.range(1, 3));
            Mat64 a = testutil::random_mat(rng, rows, cols, 0, m - 1);
            std::vector<i64> b(rows);
            for (auto& v : b) v = rng.range(0, m - 1);
            auto got = solve_mod(a, b, m);
            // brute-force solvability
            bool solvable = false;
            for (const auto& v : testutil::all_vectors(cols, m)) {
                auto img = a.apply_mod(v, m);
                if (img == b) { solvable = true; break; }
            }
            CHECK(got.has_value() == solvable);
            if (got) CHECK(a.apply_mod(*got, m) == b);
            ModSolver hs(a, m);
            auto got2 = hs.solve(b);
            CHECK(got2.has_value() == solvable);
            if (got2) CHECK(a.apply_mod(*got2, m) == b);
        }
    }
}

TEST_CASE("subgroup machinery") {
    // inside Z/4 + Z/2: <(2,1)> has order 2
    Subgroup s({4, 2}, {{2, 1}});
    CHECK(s.order() == 2);
    auto f = s.invariant_factors();
    REQUIRE(f.size() == 1);
    CHECK(f[0] == 2);
    CHECK(s.contains({2, 1}));
    CHECK(s.contains({0, 0}));
    CHECK(!s.contains({2, 0}));

    // kernel of (x,y) -> x+2y : Z/4+Z/2 -> Z/4  is {(0,0),(2,1)}
    Mat64 map = mat_from_rows({{1, 2}});
    Subgroup k = kernel_subgroup(map, {4, 2}, {4});
    CHECK(k.order() == 2);
    CHECK(k == s);

    Subgroup img = image_subgroup(mat_from_rows({{2}, {1}}), {4, 2});
    CHECK(img.order() == 2);
    CHECK(img == s);
}

TEST_CASE("lattice basis solve") {
    IntMatrix gens = from_rows({{2, 0, 4}, {0, 3, 0}});
    // columns span 2Z x 3Z
    LatticeBasis b = lattice_basis(gens);
    IntMatrix x(2, 1);
    x.at(0, 0) = 6;
    x.at(1, 0) = -3;
    IntMatrix y;
    REQUIRE(b.solve(x, y));
    IntMatrix back = b.basis() * y;
    CHECK(back == x);
    x.at(0, 0) = 1;
    CHECK(!b.solve(x, y));
}
