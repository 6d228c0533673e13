#pragma once

#include "bicross/fingroup.hpp"
#include "bicross/presentation.hpp"

#include <string>

namespace bicross {

/// Cosimplicial object in free Z/m-modules up to a degree bound:
/// cofaces d^i : X^n -> X^{n+1} (0 <= i <= n+1) and codegeneracies
/// s^j : X^{n+1} -> X^n (0 <= j <= n), subject to the cosimplicial
/// identities (verified).
struct CosimplicialObject {
    i64 m = 2;
    std::vector<int> ranks;                       // degree 0..bound
    std::vector<std::vector<Mat64>> coface;       // coface[n][i], n < bound
    std::vector<std::vector<Mat64>> codegeneracy; // codegeneracy[n][j]: X^{n+1} -> X^n

    int bound() const { return static_cast<int>(ranks.size()) - 1; }
    void verify_identities() const; // throws ComplexIdentity
    Mat64 cochain_differential(int n) const; // alternating coface sum
};

/// The Dold-Kan pieces of a cosimplicial object: N^n = cap ker s^i and
/// D^n = sum im d^j, with N a subcomplex of the cochain complex.
struct NormalizedParts {
    std::vector<std::vector<std::vector<i64>>> n_gens; // per degree
    std::vector<std::vector<std::vector<i64>>> d_gens;
    std::vector<mpz_class> n_order, d_order;
    // induced differential: images of the N-generators under the cochain
    // differential, in ambient coordinates
    std::vector<std::vector<std::vector<i64>>> n_differential;
};

/// Splits C(X) = N(X) + D(X); throws SplittingFailed when the counting
/// identities |N||D| = |C| or N + D = C fail.
NormalizedParts normalize(const CosimplicialObject& x);

/// H^n of the normalized subcomplex, as a presentation.
Presentation normalized_cohomology(const CosimplicialObject& x, const NormalizedParts& parts,
                                   int n);
/// H^n of the full cochain complex.
Presentation cochain_cohomology(const CosimplicialObject& x, int n);

/// Cosimplicial bicomplex of free Z/m-modules with commuting horizontal
/// and vertical structures.
class CosimplicialBicomplex {
public:
    CosimplicialBicomplex(i64 m, int bound) : m_m(m), m_bound(bound) {}

    i64 modulus() const { return m_m; }
    int bound() const { return m_bound; }

    int rank(int p, int q) const { return m_ranks[slot(p, q)]; }

    const Mat64& coface_h(int p, int q, int i) const { return m_dh[slot(p, q)][i]; }
    const Mat64& coface_v(int p, int q, int j) const { return m_dv[slot(p, q)][j]; }
    const Mat64& codeg_h(int p, int q, int j) const { return m_sh[slot(p, q)][j]; }
    const Mat64& codeg_v(int p, int q, int j) const { return m_sv[slot(p, q)][j]; }

    // cosimplicial identities in both directions plus commutation
    void verify_identities() const;

    CosimplicialObject diag() const;
    CosimplicialObject row(int q) const;    // horizontal structure at fixed q
    CosimplicialObject column(int p) const; // vertical structure at fixed p

    // total cochain complex with d_v twisted by (-1)^p
    struct TotLayout {
        std::vector<std::pair<int, int>> blocks;
        std::vector<int> offset;
        int rank = 0;
        int block_index(int p, int q) const;
    };
    TotLayout tot_layout(int n) const;
    Mat64 tot_differential(int n) const;
    Mat64 diag_differential(int n) const;

    friend CosimplicialBicomplex bicomplex_from_matched_pair(const GroupMatchedPair& mp, i64 m,
                                                             int bound, long size_guard);

private:
    int slot(int p, int q) const { return p * (m_bound + 1) + q; }

    i64 m_m;
    int m_bound;
    std::vector<int> m_ranks;
    std::vector<std::vector<Mat64>> m_dh, m_dv, m_sh, m_sv;
};

/// Unnormalized cochain bicomplex of a matched pair: X^{p,q} is the full
/// function space on T^p x N^q, cofaces are the individual twisted faces,
/// codegeneracies insert identity elements.  All identities are asserted.
CosimplicialBicomplex bicomplex_from_matched_pair(const GroupMatchedPair& mp, i64 m, int bound,
                                                  long size_guard = 1L << 24);

/// A map of cochain complexes given degreewise; commutation with the
/// differentials is what alexander_whitney / shuffle assert.
struct CochainMap {
    std::vector<Mat64> degree; // degree[n]: source^n -> target^n
};

/// g : Tot(X) -> C(Diag X), g_{p,q} = d_h^n ... d_h^{p+1} (d_v^0)^p.
CochainMap alexander_whitney(const CosimplicialBicomplex& x, int n_max);

/// f : C(Diag X) -> Tot(X) by signed shuffles of codegeneracies.
CochainMap shuffle_map(const CosimplicialBicomplex& x, int n_max);

struct EZReport {
    std::vector<std::string> tot_factors, diag_factors;
    std::vector<bool> iso; // per degree: induced maps mutually inverse
    bool all_iso = false;
};

/// H^n(Tot) vs H^n(Diag) with the induced maps of g and f checked to be
/// mutually inverse, for n <= n_max.
EZReport verify_ez(const CosimplicialBicomplex& x, int n_max);

} // namespace bicross
