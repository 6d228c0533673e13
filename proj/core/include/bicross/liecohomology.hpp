#pragma once

#include "bicross/barcomplex.hpp"
#include "bicross/fingroup.hpp"
#include "bicross/intmatrix.hpp"

#include <string>

namespace bicross {

/// Finite-dimensional Lie algebra over Q by structure constants:
/// [e_i, e_j] = sum_k c^k_{ij} e_k.  Antisymmetry and the Jacobi identity
/// are checked exhaustively on construction.
class LieAlgebraData {
public:
    LieAlgebraData(int dim, std::vector<RationalMatrix> bracket_coeffs);

    int dim() const { return m_dim; }
    const mpq_class& c(int k, int i, int j) const { return m_c[k].at(i, j); }

    // coordinates of [x, y] for coordinate vectors x, y
    std::vector<mpq_class> bracket(const std::vector<mpq_class>& x,
                                   const std::vector<mpq_class>& y) const;

    static LieAlgebraData abelian(int n);
    static LieAlgebraData special_linear(int n); // sl_n over Q

    // does the matrix a preserve the bracket? ([ax, ay] = a[x, y])
    bool is_automorphism(const RationalMatrix& a) const;

private:
    int m_dim;
    std::vector<RationalMatrix> m_c; // m_c[k].at(i,j) = c^k_{ij}
};

/// The complex Lambda^* g' with (d w)(x_0..x_p) =
/// sum_{a<b} (-1)^{a+b} w([x_a,x_b], x_0..^a..^b..x_p).
class ChevalleyEilenbergComplex {
public:
    ChevalleyEilenbergComplex(const LieAlgebraData& g, int n_max);

    const LieAlgebraData& algebra() const { return m_g; }
    int n_max() const { return m_n_max; }
    int dim(int p) const; // binomial(n, p)
    const RationalMatrix& differential(int p) const;

    int h_dim(int p) const;
    // columns: cocycle representatives spanning H^p inside ker d^p
    RationalMatrix h_basis(int p) const;

    // subsets of {0..n-1} of size p in lexicographic order
    const std::vector<std::vector<int>>& subsets(int p) const;
    int subset_index(const std::vector<int>& s) const;

private:
    LieAlgebraData m_g;
    int m_n_max;
    std::vector<std::vector<std::vector<int>>> m_subsets;
    std::vector<RationalMatrix> m_d;
};

/// Finite group acting on a Lie algebra by bracket-preserving matrices;
/// validated as a representation.
struct LieGroupAction {
    FiniteGroup group;
    std::vector<RationalMatrix> matrices;

    void validate(const LieAlgebraData& g) const; // NotAutomorphism / BadAction
};

/// Matrices of the action of each group element on H^p, by pulling
/// cocycles back along rho(g)^{-1}; the representation property on H^p is
/// asserted.
std::vector<RationalMatrix> induced_action_on_h(const ChevalleyEilenbergComplex& ce,
                                                const LieGroupAction& action, int degree);

/// Basis (columns) of the common fixed subspace of a list of operators.
RationalMatrix invariants(const std::vector<RationalMatrix>& operators);

// ----------------------------------------------------------------- method

struct Method6Input {
    LieAlgebraData lie;
    FiniteGroup points;                           // points of the Lie side
    FiniteGroup other;                            // pure group-algebra side
    bool lie_side_is_T = true;                    // labeling only
    std::vector<RationalMatrix> act_points;       // points on lie
    std::vector<RationalMatrix> act_other;        // other on lie
    std::vector<std::vector<int>> act_on_other;   // points x other -> other
    i64 modulus = 2;
};

struct Method6Report {
    int dim_h2_lie = 0;
    int dim_h2_lie_points = 0;     // H^2(g)^{points}
    int dim_h2_lie_other = 0;      // H^2(g)^{other}
    int dim_h2_lie_semidirect = 0; // H^2(g)^{other x| points}
    std::string h2_other;
    std::string h2_other_invariant;
    int piece1_dim = 0;    // dim of the Lie-side quotient
    std::string piece2;    // finite quotient at the configured modulus
    bool coprime = false;
    bool phi_iso = false;
    std::string lie_side;  // "T" or "N"
    std::string conclusion;
    std::vector<std::string> notes;
};

/// The low-degree determination of the matched-pair H^2 for a pair
/// (U(g) x| k[points], k[other]) or its mirror: computes the two quotient
/// pieces feeding the comparison map and, under the coprimality
/// hypothesis, reports it as an isomorphism.
Method6Report method6(const Method6Input& in);

} // namespace bicross
