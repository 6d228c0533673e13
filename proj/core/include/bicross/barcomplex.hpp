#pragma once

#include "bicross/fingroup.hpp"
#include "bicross/presentation.hpp"

#include <mutex>

namespace bicross {

/// Finite abelian coefficient module with a (possibly trivial) left action
/// of a group: Z^r / diag(moduli) together with one r x r action matrix per
/// group element.
struct CoefficientModule {
    DiagModule module;         // invariant factors / per-coordinate moduli
    std::vector<Mat64> action; // indexed by group element; empty = trivial

    int rank() const { return module.rank(); }
    bool trivial_action() const;

    static CoefficientModule trivial(i64 m) {
        CoefficientModule c;
        c.module = DiagModule::uniform(1, m);
        return c;
    }
    static CoefficientModule with_action(DiagModule mod, std::vector<Mat64> act) {
        CoefficientModule c;
        c.module = std::move(mod);
        c.action = std::move(act);
        return c;
    }

    /// Action matrices must form a representation and respect the relations;
    /// throws AlgebraError("BadAction", witness).
    void validate(const FiniteGroup& g) const;
};

/// Normalized (or plain) inhomogeneous bar cochain complex of a finite
/// group with coefficients in a CoefficientModule.  Degree-n cochains are
/// indexed by tuples of non-identity elements (all elements when
/// unnormalized), with the module coordinate fastest.
class GroupCochainComplex {
public:
    GroupCochainComplex(const FiniteGroup& g, CoefficientModule coeff, int n_max,
                        bool normalized = true, long size_guard = default_size_guard);

    const FiniteGroup& group() const { return m_g; }
    const CoefficientModule& coefficients() const { return m_coeff; }
    int n_max() const { return m_n_max; }
    bool normalized() const { return m_normalized; }

    int tuple_count(int n) const; // base^n
    int rank(int n) const;        // tuple_count * module rank
    DiagModule module_at(int n) const;

    // differential C^n -> C^{n+1}
    const Mat64& differential(int n) const;

    // tuple <-> index helpers (elements are group indices; identity only
    // allowed when unnormalized)
    int tuple_index(const std::vector<int>& tuple) const;
    std::vector<int> tuple_at(int index, int n) const;

    // flat coordinate of (tuple, module coord)
    int coord(const std::vector<int>& tuple, int module_coord) const {
        return tuple_index(tuple) * m_coeff.rank() + module_coord;
    }

    static constexpr long default_size_guard = 1L << 24;

private:
    Mat64 build_differential(int n) const;

    FiniteGroup m_g;
    CoefficientModule m_coeff;
    int m_n_max;
    bool m_normalized;
    long m_guard;
    mutable std::mutex m_lock; // guards the lazy cache for concurrent readers
    mutable std::vector<Mat64> m_diff; // cache, index = degree
    mutable std::vector<bool> m_built;
};

/// H^n(G, M) via the normalized bar complex; generators are explicit
/// normalized cocycles.
Presentation group_cohomology(const FiniteGroup& g, const CoefficientModule& coeff, int n,
                              long size_guard = GroupCochainComplex::default_size_guard);

inline Presentation group_cohomology(const FiniteGroup& g, i64 m, int n) {
    return group_cohomology(g, CoefficientModule::trivial(m), n);
}

/// Matrix of the map H^n(G', M) -> H^n(G, M) obtained by precomposing
/// cocycles with phi : G -> G' argumentwise.  source/target are the
/// cohomology presentations of G' and G at degree n.
Mat64 induced_map(const FiniteGroup& g, const FiniteGroup& g_prime, const std::vector<int>& phi,
                  const CoefficientModule& coeff, int n, const Presentation& source,
                  const Presentation& target);

/// The coefficient-shift H^n(G, Z/m) -> H^n(G, Z/m') along the inclusion
/// Z/m -> Z/m', x -> (m'/m) x, for m | m'; source and target are the two
/// cohomology presentations at the same degree.
Mat64 shift_coefficients(i64 m, i64 m_prime, const Presentation& source,
                         const Presentation& target);

/// Direct evaluation of the inhomogeneous cocycle identity; independent of
/// the differential matrices, so it doubles as an oracle in the tests.
/// f is a flat value vector over the complex's indexing.
bool is_group_cocycle(const GroupCochainComplex& cx, const std::vector<i64>& f, int n);

/// Evaluate (d f)(tuple) directly from the formula.
std::vector<i64> eval_differential(const GroupCochainComplex& cx, const std::vector<i64>& f,
                                   int n, const std::vector<int>& tuple);

} // namespace bicross
