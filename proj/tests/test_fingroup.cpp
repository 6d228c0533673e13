#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include "doctest.h"

#include "bicross/errors.hpp"
#include "bicross/fingroup.hpp"

using namespace bicross;

namespace {

// C2 acting on C3 by inversion, trivial right action: bismash is S3.
GroupMatchedPair inversion_pair_c2_c3() {
    FiniteGroup t = FiniteGroup::cyclic(2);
    FiniteGroup n = FiniteGroup::cyclic(3);
    std::vector<std::vector<int>> al = {{0, 1, 2}, {0, 2, 1}};
    std::vector<std::vector<int>> ar = {{0, 0, 0}, {1, 1, 1}};
    return GroupMatchedPair::validate(t, n, al, ar);
}

} // namespace

TEST_CASE("cyclic group validates") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    CHECK(c3.order() == 3);
    CHECK(c3.mul(1, 2) == 0);
    CHECK(c3.inv(1) == 2);
    CHECK(c3.is_abelian());
}

TEST_CASE("corrupted table reports a witness") {
    // break associativity in C3
    std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    t[1][1] = 1; // 1*1 = 1 breaks things
    try {
        FiniteGroup::validate(t);
        FAIL("expected a validation error");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "NotAssociative");
        CHECK(!e.witness().empty());
    }
}

TEST_CASE("identity must sit at index 0") {
    // swap roles so element 1 is the identity
    std::vector<std::vector<int>> t = {{1, 0}, {0, 1}};
    CHECK_THROWS_AS(FiniteGroup::validate(t), AlgebraError);
}

TEST_CASE("symmetric group from permutation composition") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK(!s3.is_abelian());
    auto st = s3.order_statistics();
    CHECK(st[1] == 1);
    CHECK(st[2] == 3);
    CHECK(st[3] == 2);

    FiniteGroup s4 = FiniteGroup::symmetric(4);
    CHECK(s4.order() == 24);
    auto st4 = s4.order_statistics();
    CHECK(st4[2] == 9);
    CHECK(st4[3] == 8);
    CHECK(st4[4] == 6);
}

TEST_CASE("dihedral group") {
    FiniteGroup d4 = FiniteGroup::dihedral(4);
    CHECK(d4.order() == 8);
    auto st = d4.order_statistics();
    CHECK(st[2] == 5);
    CHECK(st[4] == 2);
}

TEST_CASE("matched pair validation accepts the inversion pair") {
    GroupMatchedPair mp = inversion_pair_c2_c3();
    CHECK(mp.act_left(1, 1) == 2);
    CHECK(mp.right_action_trivial());
    CHECK(!mp.left_action_trivial());
}

TEST_CASE("trivial actions always validate") {
    auto mp = GroupMatchedPair::trivial_pair(FiniteGroup::cyclic(4), FiniteGroup::symmetric(3));
    CHECK(mp.left_action_trivial());
    CHECK(mp.right_action_trivial());
}

TEST_CASE("broken right action is rejected with the axiom name") {
    FiniteGroup t = FiniteGroup::cyclic(2);
    FiniteGroup n = FiniteGroup::cyclic(3);
    std::vector<std::vector<int>> al = {{0, 1, 2}, {0, 1, 2}}; // trivial left
    std::vector<std::vector<int>> ar = {{0, 0, 0}, {1, 0, 1}}; // corrupt
    try {
        GroupMatchedPair::validate(t, n, al, ar);
        FAIL("expected AxiomViolation");
    } catch (const AlgebraError& e) {
        CHECK(e.code() == "AxiomViolation");
    }
}

TEST_CASE("bismash of the inversion pair is S3") {
    GroupMatchedPair mp = inversion_pair_c2_c3();
    BismashGroup b(mp);
    CHECK(b.group().order() == 6);
    auto st = b.group().order_statistics();
    CHECK(st[2] == 3);
    CHECK(st[3] == 2);
    // N x {1} and {1} x T are subgroups isomorphic to N and T
    for (int n1 = 0; n1 < 3; ++n1)
        for (int n2 = 0; n2 < 3; ++n2)
            CHECK(b.group().mul(b.embed_n(n1), b.embed_n(n2)) ==
                  b.embed_n(mp.N().mul(n1, n2)));
    for (int t1 = 0; t1 < 2; ++t1)
        for (int t2 = 0; t2 < 2; ++t2)
            CHECK(b.group().mul(b.embed_t(t1), b.embed_t(t2)) ==
                  b.embed_t(mp.T().mul(t1, t2)));
}

TEST_CASE("bismash with trivial actions is the direct product") {
    auto mp = GroupMatchedPair::trivial_pair(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    BismashGroup b(mp);
    CHECK(b.group().is_abelian());
    auto st = b.group().order_statistics();
    CHECK(st[6] == 2); // C6
}

TEST_CASE("exact factorization of S3") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    // A3 = rotations, T = <some transposition>
    std::vector<int> a3, t2;
    for (int g = 0; g < 6; ++g) {
        if (s3.element_order(g) == 3 || g == 0) a3.push_back(g);
    }
    for (int g = 1; g < 6; ++g)
        if (s3.element_order(g) == 2) { t2 = {0, g}; break; }
    GroupMatchedPair mp = from_exact_factorization(s3, a3, t2);
    CHECK(mp.N().order() == 3);
    CHECK(mp.T().order() == 2);
    CHECK(!mp.left_action_trivial()); // conjugation inverts A3
    BismashGroup b(mp);
    CHECK(bismash_matches_group(b, s3, a3, t2));
}

TEST_CASE("exact factorization of C6 has trivial actions") {
    FiniteGroup c6 = FiniteGroup::cyclic(6);
    std::vector<int> n = {0, 2, 4}; // C3
    std::vector<int> t = {0, 3};    // C2
    GroupMatchedPair mp = from_exact_factorization(c6, n, t);
    CHECK(mp.left_action_trivial());
    CHECK(mp.right_action_trivial());
    BismashGroup b(mp);
    CHECK(bismash_matches_group(b, c6, n, t));
}

TEST_CASE("factorization size mismatch is rejected") {
    FiniteGroup s4 = FiniteGroup::symmetric(4);
    // A4 has order 12, C2 gives 24 only if intersection trivial; pick T inside A4
    std::vector<int> a4;
    for (int g = 0; g < 24; ++g) {
        // even permutations: order-3 elements, double transpositions, id
        int o = s4.element_order(g);
        if (g == 0 || o == 3) a4.push_back(g);
    }
    // not a subgroup list of full A4; use a wrong-size T instead
    std::vector<int> t = {0};
    CHECK_THROWS_AS(from_exact_factorization(s4, a4, t), AlgebraError);
}

TEST_CASE("genuine Zappa-Szep factorization of S4") {
    FiniteGroup s4 = FiniteGroup::symmetric(4);
    // N = <4-cycle> has order 4; T = stabilizer of the last point (S3)
    int fourcycle = -1;
    for (int g = 0; g < 24; ++g)
        if (s4.element_order(g) == 4) { fourcycle = g; break; }
    REQUIRE(fourcycle >= 0);
    std::vector<int> n = {0, fourcycle, s4.mul(fourcycle, fourcycle),
                          s4.mul(fourcycle, s4.mul(fourcycle, fourcycle))};
    // T: first order-6 subgroup generated by a 3-cycle and a transposition
    // that misses N; S3-subgroups of S4 are the point stabilizers.
    auto closure = [&](std::vector<int> gens) {
        std::vector<bool> in(24, false);
        in[0] = true;
        std::vector<int> elems = {0};
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t i = 0; i < elems.size(); ++i)
                for (int g : gens) {
                    int x = s4.mul(elems[i], g);
                    if (!in[x]) {
                        in[x] = true;
                        elems.push_back(x);
                        grew = true;
                    }
                }
        }
        return elems;
    };
    std::vector<int> t;
    for (int a = 1; a < 24 && t.empty(); ++a) {
        if (s4.element_order(a) != 3) continue;
        for (int b = 1; b < 24 && t.empty(); ++b) {
            if (s4.element_order(b) != 2) continue;
            auto sub = closure({a, b});
            if (sub.size() != 6) continue;
            bool meets_n = false;
            for (int x : sub)
                if (x != 0 && (x == n[1] || x == n[2] || x == n[3])) meets_n = true;
            if (!meets_n) t = sub;
        }
    }
    REQUIRE(!t.empty());
    std::sort(t.begin(), t.end());
    GroupMatchedPair mp = from_exact_factorization(s4, n, t);
    CHECK(!mp.left_action_trivial());
    CHECK(!mp.right_action_trivial());
    BismashGroup b(mp);
    CHECK(bismash_matches_group(b, s4, n, t));
}

TEST_CASE("tuple actions") {
    GroupMatchedPair mp = inversion_pair_c2_c3();
    // p = 1 reduces to the table
    CHECK(mp.act_left_tuple(1, {2}) == std::vector<int>{1});
    // identity acts as identity
    CHECK(mp.act_left_tuple(0, {1, 2, 1}) == std::vector<int>{1, 2, 1});
    CHECK(mp.act_right_tuple({1, 1}, 0) == std::vector<int>{1, 1});
    // hand-unrolled p = 2 for the inversion pair: a |> (n, n) = (n^2, n^2)
    CHECK(mp.act_left_tuple(1, {1, 1}) == std::vector<int>{2, 2});

    // module property: (ts) |> v = t |> (s |> v), exhaustively
    const auto& t = mp.T();
    for (int a = 0; a < t.order(); ++a)
        for (int s = 0; s < t.order(); ++s)
            for (int n1 = 0; n1 < 3; ++n1)
                for (int n2 = 0; n2 < 3; ++n2) {
                    std::vector<int> v = {n1, n2};
                    CHECK(mp.act_left_tuple(t.mul(a, s), v) ==
                          mp.act_left_tuple(a, mp.act_left_tuple(s, v)));
                }
}

TEST_CASE("collapsing tuple entries commutes with the action") {
    // (t |> v) with adjacent entries multiplied equals acting after
    // multiplying, for every slot
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    std::vector<int> n_elems = {0, 3, 4}; // will recompute below if wrong
    // find A3 again
    n_elems.clear();
    for (int g = 0; g < 6; ++g)
        if (g == 0 || s3.element_order(g) == 3) n_elems.push_back(g);
    std::vector<int> t_elems;
    for (int g = 1; g < 6; ++g)
        if (s3.element_order(g) == 2) { t_elems = {0, g}; break; }
    GroupMatchedPair mp = from_exact_factorization(s3, n_elems, t_elems);
    const auto& N = mp.N();
    for (int t = 0; t < mp.T().order(); ++t)
        for (int a = 0; a < N.order(); ++a)
            for (int b = 0; b < N.order(); ++b)
                for (int c = 0; c < N.order(); ++c) {
                    std::vector<int> v = {a, b, c};
                    auto w = mp.act_left_tuple(t, v);
                    // collapse slots 1,2 after acting
                    std::vector<int> lhs = {N.mul(w[0], w[1]), w[2]};
                    // collapse before acting
                    auto rhs = mp.act_left_tuple(t, {N.mul(a, b), c});
                    CHECK(lhs == rhs);
                    // and slots 2,3
                    lhs = {w[0], N.mul(w[1], w[2])};
                    rhs = mp.act_left_tuple(t, {a, N.mul(b, c)});
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("bismash multiplication is associative at desk scale") {
    GroupMatchedPair mp = inversion_pair_c2_c3();
    BismashGroup b(mp);
    const auto& g = b.group();
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            for (int z = 0; z < g.order(); ++z)
                CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
}
