#pragma once

#include "bicross/fingroup.hpp"
#include "bicross/presentation.hpp"

#include <mutex>

namespace bicross {

/// The normalized double complex of a matched pair with coefficients Z/m
/// (trivial action): blocks C^{p,q} of rank (|T|-1)^p (|N|-1)^q indexed by
/// tuples of non-identity elements, with the twisted differentials
/// delta_T : C^{p,q} -> C^{p+1,q} and delta_N : C^{p,q} -> C^{p,q+1}.
/// T-tuples are stored left-to-right; the reversed face numbering on the
/// T side is confined to the face construction in delta_T.
class MPDoubleComplex {
public:
    MPDoubleComplex(const GroupMatchedPair& mp, i64 m, int p_max, int q_max,
                    long size_guard = default_size_guard);

    const GroupMatchedPair& pair() const { return m_mp; }
    i64 modulus() const { return m_m; }
    int p_max() const { return m_p_max; }
    int q_max() const { return m_q_max; }

    int t_count(int p) const; // (|T|-1)^p
    int n_count(int q) const;
    int rank(int p, int q) const { return t_count(p) * n_count(q); }

    const Mat64& delta_T(int p, int q) const; // C^{p,q} -> C^{p+1,q}
    const Mat64& delta_N(int p, int q) const; // C^{p,q} -> C^{p,q+1}

    // index of (t-tuple, n-tuple) inside C^{p,q}
    int index_of(const std::vector<int>& ts, const std::vector<int>& ns, int q) const;
    std::pair<std::vector<int>, std::vector<int>> tuples_at(int idx, int p, int q) const;

    // delta_T^2 = 0, delta_N^2 = 0 and the two commute on all buildable
    // blocks; throws on violation.
    void verify_identities() const;

    // ---- edge-deleted total complex (blocks with p,q >= 1) ----
    struct TotLayout {
        std::vector<std::pair<int, int>> blocks; // ascending p
        std::vector<int> offset;
        int rank = 0;
        int block_index(int p, int q) const;
    };
    TotLayout tot_layout(int total_degree) const;
    // D : Tot^k -> Tot^{k+1} with the (-1)^p twist on the delta_N part.
    Mat64 total_differential(int total_degree) const;

    static constexpr long default_size_guard = 1L << 24;

private:
    Mat64 build_delta_T(int p, int q) const;
    Mat64 build_delta_N(int p, int q) const;
    void check_guard(int rows, int cols, int p, int q) const;

    GroupMatchedPair m_mp;
    i64 m_m;
    int m_p_max, m_q_max;
    long m_guard;
    mutable std::mutex m_lock; // guards the lazy block caches
    mutable std::vector<Mat64> m_dt, m_dn;
    mutable std::vector<char> m_dt_built, m_dn_built;
    int slot(int p, int q) const { return p * (m_q_max + 1) + q; }
};

/// A class in the total complex at total degree i+1: components
/// f_j : T^j x N^{i+1-j} -> Z/m for 1 <= j <= i.
struct MPCohomologyClass {
    int degree = 0;                          // i
    std::vector<std::pair<int, int>> blocks; // (p, q) per component
    std::vector<int> offsets;
    std::vector<i64> value;                  // flat over the layout

    std::vector<i64> component(int p, int q, const MPDoubleComplex& cx) const;
};

struct MPCohomology {
    Presentation pres;
    std::vector<MPCohomologyClass> generator_classes;
};

/// H^{i+1}(Tot C_0), the matched-pair cohomology at degree i >= 1.
MPCohomology matched_pair_cohomology(const GroupMatchedPair& mp, i64 m, int i,
                                     long size_guard = MPDoubleComplex::default_size_guard);

/// The subgroup of classes representable by a single bidegree component
/// (p, i+1-p), with its embedding into the full group.
struct RestrictedSubgroup {
    Presentation pres;    // Z^i_p / B^i_p, ambient C^{p,i+1-p}
    Mat64 embedding;      // coordinates in the full matched-pair cohomology
};
RestrictedSubgroup restricted_subgroup(const MPDoubleComplex& cx, int i, int p,
                                       const MPCohomology& full);

/// Bidegree cohomology Z^{i,j}/B^{i,j}; requires the right action trivial.
/// Membership solvers run through solve_mod, matching the stated design.
Presentation bidegree_cohomology(const MPDoubleComplex& cx, int i, int j);

/// H^i(G, H^j(N, Z/m)) for a pair with trivial right action: coefficients
/// are the degree-j cohomology of N, with G acting by precomposition
/// (turned into a left module via inverses).  The other side of the same
/// comparison is bidegree_cohomology(i, j).
Presentation iterated_cohomology(const GroupMatchedPair& mp, i64 m, int i, int j);

/// The map pi : full matched-pair H^2 -> H^{1,2} induced by
/// (f_1, f_2) -> f_1; the presentation of H^{1,2} is computed internally
/// and returned with the matrix.
struct PiMap {
    Presentation target; // H^{1,2}
    Mat64 matrix;
};
PiMap pi_map(const MPDoubleComplex& cx, const MPCohomology& h2);

} // namespace bicross
