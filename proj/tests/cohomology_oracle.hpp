#pragma once

// Brute-force group cohomology: enumerate normalized cochains, test the
// cocycle identity by direct evaluation and collect coboundaries the same
// way.  Independent of the kernel/image machinery in the library; the only
// shared ingredient is the differential formula itself.

#include "bicross/barcomplex.hpp"
#include "test_helpers.hpp"

#include <map>
#include <set>

namespace testutil {

using bicross::GroupCochainComplex;
using bicross::i64;

// All value vectors of C^n, honoring per-coordinate moduli.
inline std::vector<std::vector<i64>> all_cochains(const GroupCochainComplex& cx, int n) {
    const int rank = cx.rank(n);
    const auto& moduli = cx.coefficients().module.moduli;
    const int r = cx.coefficients().rank();
    std::vector<std::vector<i64>> out;
    std::vector<i64> v(rank, 0);
    for (;;) {
        out.push_back(v);
        int i = rank - 1;
        for (; i >= 0; --i) {
            if (++v[i] < moduli[i % r]) break;
            v[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

struct BruteCohomology {
    std::vector<std::vector<i64>> cocycles;
    std::set<std::vector<i64>> coboundaries;

    unsigned long long order() const { return cocycles.size() / coboundaries.size(); }

    // number of d-torsion elements of Z/B
    unsigned long long torsion_count(i64 d, const GroupCochainComplex& cx) const {
        const auto& moduli = cx.coefficients().module.moduli;
        const int r = cx.coefficients().rank();
        unsigned long long c = 0;
        for (const auto& f : cocycles) {
            std::vector<i64> df(f.size());
            for (size_t i = 0; i < f.size(); ++i)
                df[i] = bicross::mod_reduce(d * f[i], moduli[i % r]);
            if (coboundaries.count(df)) ++c;
        }
        return c / coboundaries.size();
    }
};

inline std::vector<i64> brute_coboundary(const GroupCochainComplex& cx,
                                         const std::vector<i64>& g, int n) {
    // delta g as a vector over the degree-(n+1) basis
    const int r = cx.coefficients().rank();
    std::vector<i64> out(cx.rank(n + 1));
    for (int ti = 0; ti < cx.tuple_count(n + 1); ++ti) {
        auto tup = cx.tuple_at(ti, n + 1);
        auto v = bicross::eval_differential(cx, g, n, tup);
        for (int k = 0; k < r; ++k) out[ti * r + k] = v[k];
    }
    return out;
}

inline BruteCohomology brute_cohomology(const GroupCochainComplex& cx, int n) {
    BruteCohomology out;
    for (const auto& f : all_cochains(cx, n))
        if (bicross::is_group_cocycle(cx, f, n)) out.cocycles.push_back(f);
    for (const auto& g : all_cochains(cx, n - 1)) out.coboundaries.insert(brute_coboundary(cx, g, n - 1));
    return out;
}

// Compare a presentation against the brute-force groups by order and
// d-torsion counts for all d dividing the coefficient lcm; this pins the
// isomorphism type of a finite abelian group killed by that lcm.
inline bool profiles_match(const bicross::Presentation& p, const BruteCohomology& b,
                           const GroupCochainComplex& cx) {
    if (p.order() != mpz_class(static_cast<unsigned long>(b.order()))) return false;
    i64 L = cx.coefficients().module.lcm();
    for (i64 d = 1; d <= L; ++d) {
        if (L % d != 0) continue;
        mpz_class want = 1;
        for (const auto& f : p.invariant_factors()) {
            mpz_class g;
            mpz_class dd(static_cast<long>(d));
            mpz_gcd(g.get_mpz_t(), dd.get_mpz_t(), f.get_mpz_t());
            want *= g;
        }
        if (want != mpz_class(static_cast<unsigned long>(b.torsion_count(d, cx)))) return false;
    }
    return true;
}

} // namespace testutil
