#include "bicross/liecohomology.hpp"

#include "bicross/errors.hpp"
#include "bicross/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace bicross {

LieAlgebraData::LieAlgebraData(int dim, std::vector<RationalMatrix> bracket_coeffs)
    : m_dim(dim), m_c(std::move(bracket_coeffs)) {
    if (static_cast<int>(m_c.size()) != dim)
        throw AlgebraError("BadStructureConstants", "need one coefficient matrix per basis vector");
    for (const auto& ck : m_c)
        if (ck.rows() != dim || ck.cols() != dim)
            throw AlgebraError("BadStructureConstants", "coefficient matrix shape");
    // antisymmetry
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (m_c[k].at(i, j) != -m_c[k].at(j, i))
                    throw AlgebraError("BadStructureConstants",
                                       "antisymmetry fails at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
    // Jacobi: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    mpq_class acc = 0;
                    for (int m = 0; m < dim; ++m) {
                        acc += m_c[m].at(j, k) * m_c[l].at(i, m);
                        acc += m_c[m].at(k, i) * m_c[l].at(j, m);
                        acc += m_c[m].at(i, j) * m_c[l].at(k, m);
                    }
                    if (acc != 0)
                        throw AlgebraError("JacobiViolated",
                                           "(" + std::to_string(i) + "," + std::to_string(j) +
                                               "," + std::to_string(k) + ")");
                }
}

std::vector<mpq_class> LieAlgebraData::bracket(const std::vector<mpq_class>& x,
                                               const std::vector<mpq_class>& y) const {
    std::vector<mpq_class> out(m_dim, 0);
    for (int i = 0; i < m_dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < m_dim; ++j) {
            if (y[j] == 0) continue;
            for (int k = 0; k < m_dim; ++k)
                if (m_c[k].at(i, j) != 0) out[k] += x[i] * y[j] * m_c[k].at(i, j);
        }
    }
    return out;
}

LieAlgebraData LieAlgebraData::abelian(int n) {
    return LieAlgebraData(n, std::vector<RationalMatrix>(n, RationalMatrix(n, n)));
}

LieAlgebraData LieAlgebraData::special_linear(int n) {
    // basis: E_{ij} (i != j) in row-major order, then H_k = E_kk - E_{k+1,k+1}
    struct Basis {
        std::vector<std::pair<int, int>> off;
        int n;
        int dim() const { return static_cast<int>(off.size()) + n - 1; }
    } basis;
    basis.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) basis.off.emplace_back(i, j);
    const int d = basis.dim();
    // dense gl_n matrix for each basis element
    auto to_matrix = [&](int idx) {
        RationalMatrix m(n, n);
        if (idx < static_cast<int>(basis.off.size())) {
            m.at(basis.off[idx].first, basis.off[idx].second) = 1;
        } else {
            int k = idx - static_cast<int>(basis.off.size());
            m.at(k, k) = 1;
            m.at(k + 1, k + 1) = -1;
        }
        return m;
    };
    // coordinates of a traceless matrix in the basis
    auto coords = [&](const RationalMatrix& m) {
        std::vector<mpq_class> c(d, 0);
        for (size_t t = 0; t < basis.off.size(); ++t)
            c[t] = m.at(basis.off[t].first, basis.off[t].second);
        // diagonal part: partial sums against H_k
        mpq_class run = 0;
        for (int k = 0; k + 1 < n; ++k) {
            run += m.at(k, k);
            c[basis.off.size() + k] = run;
        }
        return c;
    };
    std::vector<RationalMatrix> cks(d, RationalMatrix(d, d));
    for (int i = 0; i < d; ++i) {
        RationalMatrix a = to_matrix(i);
        for (int j = 0; j < d; ++j) {
            RationalMatrix b = to_matrix(j);
            RationalMatrix br = a * b - b * a;
            auto cv = coords(br);
            for (int k = 0; k < d; ++k) cks[k].at(i, j) = cv[k];
        }
    }
    return LieAlgebraData(d, std::move(cks));
}

bool LieAlgebraData::is_automorphism(const RationalMatrix& a) const {
    if (a.rows() != m_dim || a.cols() != m_dim) return false;
    if (a.rank() != m_dim) return false;
    std::vector<mpq_class> ei(m_dim), ej(m_dim);
    for (int i = 0; i < m_dim; ++i)
        for (int j = 0; j < m_dim; ++j) {
            // [a e_i, a e_j] vs a [e_i, e_j]
            std::vector<mpq_class> ai(m_dim), aj(m_dim);
            for (int k = 0; k < m_dim; ++k) {
                ai[k] = a.at(k, i);
                aj[k] = a.at(k, j);
            }
            std::vector<mpq_class> lhs = bracket(ai, aj);
            std::vector<mpq_class> rhs(m_dim, 0);
            for (int k = 0; k < m_dim; ++k)
                for (int l = 0; l < m_dim; ++l) rhs[k] += a.at(k, l) * c(l, i, j);
            if (lhs != rhs) return false;
        }
    return true;
}

// ------------------------------------------------------ Chevalley-Eilenberg

ChevalleyEilenbergComplex::ChevalleyEilenbergComplex(const LieAlgebraData& g, int n_max)
    : m_g(g), m_n_max(n_max) {
    const int n = g.dim();
    m_subsets.resize(n_max + 2);
    for (int p = 0; p <= n_max + 1; ++p) {
        if (p > n) continue;
        std::vector<std::vector<int>>& out = m_subsets[p];
        std::vector<bool> s(n, false);
        for (int i = 0; i < p; ++i) s[i] = true;
        do {
            std::vector<int> sub;
            for (int i = 0; i < n; ++i)
                if (s[i]) sub.push_back(i);
            out.push_back(std::move(sub));
        } while (std::prev_permutation(s.begin(), s.end()));
        std::sort(out.begin(), out.end());
    }
    m_d.resize(n_max + 1);
    for (int p = 0; p <= n_max; ++p) {
        const auto& rows = subsets(p + 1);
        const auto& cols = subsets(p);
        RationalMatrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t r = 0; r < rows.size(); ++r) {
            const auto& R = rows[r];
            for (size_t a = 0; a < R.size(); ++a)
                for (size_t b = a + 1; b < R.size(); ++b) {
                    // (-1)^{a+b} w([e_{R_a}, e_{R_b}], rest)
                    std::vector<int> rest;
                    for (size_t t = 0; t < R.size(); ++t)
                        if (t != a && t != b) rest.push_back(R[t]);
                    for (int k = 0; k < g.dim(); ++k) {
                        const mpq_class& ck = g.c(k, R[a], R[b]);
                        if (ck == 0) continue;
                        // insert k in front of rest, sort with sign
                        if (std::find(rest.begin(), rest.end(), k) != rest.end()) continue;
                        std::vector<int> s = rest;
                        int pos = static_cast<int>(std::lower_bound(s.begin(), s.end(), k) -
                                                   s.begin());
                        s.insert(s.begin() + pos, k);
                        int sign = ((a + b) % 2 == 0 ? 1 : -1) * (pos % 2 == 0 ? 1 : -1);
                        d.at(static_cast<int>(r), subset_index(s)) += sign * ck;
                    }
                }
        }
        m_d[p] = std::move(d);
    }
    for (int p = 0; p + 1 <= n_max; ++p)
        if (!(m_d[p + 1] * m_d[p]).is_zero())
            throw AlgebraError("InternalError", "CE differential does not square to zero");
}

int ChevalleyEilenbergComplex::dim(int p) const {
    if (p < 0 || p > m_g.dim()) return 0;
    return static_cast<int>(m_subsets[p].size());
}

const RationalMatrix& ChevalleyEilenbergComplex::differential(int p) const {
    assert(p >= 0 && p <= m_n_max);
    return m_d[p];
}

const std::vector<std::vector<int>>& ChevalleyEilenbergComplex::subsets(int p) const {
    static const std::vector<std::vector<int>> empty;
    if (p < 0 || p > m_g.dim() || p >= static_cast<int>(m_subsets.size())) return empty;
    return m_subsets[p];
}

int ChevalleyEilenbergComplex::subset_index(const std::vector<int>& s) const {
    const auto& v = m_subsets[s.size()];
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), s) - v.begin());
}

int ChevalleyEilenbergComplex::h_dim(int p) const {
    int z = dim(p) - differential(p).rank();
    int b = (p == 0) ? 0 : differential(p - 1).rank();
    return z - b;
}

RationalMatrix ChevalleyEilenbergComplex::h_basis(int p) const {
    RationalMatrix kern = differential(p).kernel_basis(); // dim(p) x z
    const RationalMatrix& dprev = (p == 0) ? RationalMatrix(0, 0) : differential(p - 1);
    // greedily extend a basis of the image by kernel vectors
    RationalMatrix acc(dim(p), 0);
    std::vector<std::vector<mpq_class>> chosen_cols;
    auto with_col = [&](const RationalMatrix& base, const std::vector<mpq_class>& col) {
        RationalMatrix m(dim(p), base.cols() + 1);
        for (int i = 0; i < dim(p); ++i) {
            for (int j = 0; j < base.cols(); ++j) m.at(i, j) = base.at(i, j);
            m.at(i, base.cols()) = col[i];
        }
        return m;
    };
    RationalMatrix span(dim(p), 0);
    if (p > 0) {
        // image basis: independent columns of dprev
        for (int c = 0; c < dprev.cols(); ++c) {
            std::vector<mpq_class> col(dim(p));
            for (int i = 0; i < dim(p); ++i) col[i] = dprev.at(i, c);
            RationalMatrix cand = with_col(span, col);
            if (cand.rank() > span.rank()) span = std::move(cand);
        }
    }
    RationalMatrix reps(dim(p), 0);
    for (int c = 0; c < kern.cols(); ++c) {
        std::vector<mpq_class> col(dim(p));
        for (int i = 0; i < dim(p); ++i) col[i] = kern.at(i, c);
        RationalMatrix cand = with_col(span, col);
        if (cand.rank() > span.rank()) {
            span = std::move(cand);
            reps = with_col(reps, col);
        }
    }
    assert(reps.cols() == h_dim(p));
    return reps;
}

// ------------------------------------------------------------- Lie actions

void LieGroupAction::validate(const LieAlgebraData& g) const {
    if (static_cast<int>(matrices.size()) != group.order())
        throw AlgebraError("BadAction", "one matrix per group element required");
    for (const auto& m : matrices)
        if (!g.is_automorphism(m))
            throw AlgebraError("NotAutomorphism", "matrix does not preserve the bracket");
    RationalMatrix id = RationalMatrix::identity(g.dim());
    if (!(matrices[0] == id))
        throw AlgebraError("BadAction", "identity element must act as the identity");
    for (int a = 0; a < group.order(); ++a)
        for (int b = 0; b < group.order(); ++b)
            if (!(matrices[a] * matrices[b] == matrices[group.mul(a, b)]))
                throw AlgebraError("BadAction", "matrices do not form a representation at (" +
                                                    std::to_string(a) + "," + std::to_string(b) +
                                                    ")");
}

namespace {

RationalMatrix rational_inverse(const RationalMatrix& a) {
    const int n = a.rows();
    RationalMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    aug.rref();
    RationalMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// action of one invertible matrix on Lambda^p coordinates by pullback:
// (m . w)(x_1..x_p) = w(a x_1, .., a x_p) with a = rho^{-1}
RationalMatrix exterior_pullback(const ChevalleyEilenbergComplex& ce, const RationalMatrix& a,
                                 int p) {
    const auto& subs = ce.subsets(p);
    RationalMatrix out(static_cast<int>(subs.size()), static_cast<int>(subs.size()));
    for (size_t S = 0; S < subs.size(); ++S)
        for (size_t J = 0; J < subs.size(); ++J) {
            // coefficient of w_J in (pullback of w_S) = det a[S, J]
            RationalMatrix minor(p, p);
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < p; ++c) minor.at(r, c) = a.at(subs[S][r], subs[J][c]);
            // determinant by rref-free small expansion: use rank trick via
            // fraction determinant
            mpq_class det;
            {
                // Bareiss on rationals is overkill; use recursive expansion
                // for the small p involved (p <= 4 at desk scale)
                std::function<mpq_class(std::vector<int>, std::vector<int>)> dd =
                    [&](std::vector<int> rows, std::vector<int> cols) -> mpq_class {
                    if (rows.empty()) return 1;
                    mpq_class acc = 0;
                    for (size_t k = 0; k < cols.size(); ++k) {
                        const mpq_class& v = minor.at(rows[0], cols[k]);
                        if (v == 0) continue;
                        std::vector<int> r2(rows.begin() + 1, rows.end());
                        std::vector<int> c2;
                        for (size_t t = 0; t < cols.size(); ++t)
                            if (t != k) c2.push_back(cols[t]);
                        mpq_class sub = dd(r2, c2);
                        acc += ((k % 2 == 0) ? v : -v) * sub;
                    }
                    return acc;
                };
                std::vector<int> rr(p), cc(p);
                for (int i = 0; i < p; ++i) rr[i] = i, cc[i] = i;
                det = dd(rr, cc);
            }
            out.at(static_cast<int>(J), static_cast<int>(S)) = det;
        }
    return out;
}

} // namespace

std::vector<RationalMatrix> induced_action_on_h(const ChevalleyEilenbergComplex& ce,
                                                const LieGroupAction& action, int degree) {
    action.validate(ce.algebra());
    RationalMatrix hb = ce.h_basis(degree);
    const int hd = hb.cols();
    const RationalMatrix& dprev =
        degree == 0 ? RationalMatrix(0, 0) : ce.differential(degree - 1);

    std::vector<RationalMatrix> out;
    for (int g = 0; g < action.group.order(); ++g) {
        RationalMatrix a = rational_inverse(action.matrices[g]);
        RationalMatrix lam = exterior_pullback(ce, a, degree);
        // express lam * h_i in the h-basis modulo the image
        RationalMatrix sys(ce.dim(degree), hd + dprev.cols() + 1);
        RationalMatrix res(hd, hd);
        for (int i = 0; i < hd; ++i) {
            // rhs = lam * hb col i
            for (int r = 0; r < ce.dim(degree); ++r) {
                mpq_class acc = 0;
                for (int k = 0; k < ce.dim(degree); ++k) acc += lam.at(r, k) * hb.at(k, i);
                sys.at(r, hd + dprev.cols()) = acc;
            }
            for (int r = 0; r < ce.dim(degree); ++r) {
                for (int j = 0; j < hd; ++j) sys.at(r, j) = hb.at(r, j);
                for (int j = 0; j < dprev.cols(); ++j) sys.at(r, hd + j) = dprev.at(r, j);
            }
            RationalMatrix solved = sys;
            std::vector<int> piv = solved.rref();
            // read the solution of [hb | im | rhs]
            for (size_t pr = 0; pr < piv.size(); ++pr) {
                if (piv[pr] >= hd) continue;
                res.at(piv[pr], i) = solved.at(static_cast<int>(pr), hd + dprev.cols());
            }
            // consistency: rhs must be in the span
            for (size_t pr = 0; pr < piv.size(); ++pr)
                if (piv[pr] == hd + dprev.cols())
                    throw AlgebraError("InternalError", "action does not preserve cocycles");
        }
        out.push_back(std::move(res));
    }
    // representation property on H^degree
    for (int a = 0; a < action.group.order(); ++a)
        for (int b = 0; b < action.group.order(); ++b)
            if (!(out[a] * out[b] == out[action.group.mul(a, b)]))
                throw AlgebraError("InternalError", "induced maps are not a representation");
    return out;
}

RationalMatrix invariants(const std::vector<RationalMatrix>& operators) {
    assert(!operators.empty());
    const int n = operators[0].rows();
    RationalMatrix stacked(static_cast<int>(operators.size()) * n, n);
    for (size_t g = 0; g < operators.size(); ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                stacked.at(static_cast<int>(g) * n + i, j) =
                    operators[g].at(i, j) - (i == j ? 1 : 0);
    return stacked.kernel_basis();
}

// ----------------------------------------------------------------- method

Method6Report method6(const Method6Input& in) {
    Method6Report rep;
    rep.lie_side = in.lie_side_is_T ? "T" : "N";
    const i64 m = in.modulus;

    LieGroupAction pts_action{in.points, in.act_points};
    LieGroupAction other_action{in.other, in.act_other};
    pts_action.validate(in.lie);
    other_action.validate(in.lie);

    ChevalleyEilenbergComplex ce(in.lie, std::min(in.lie.dim(), 3));
    rep.dim_h2_lie = ce.h_dim(2);

    auto rho_pts = induced_action_on_h(ce, pts_action, 2);
    rep.dim_h2_lie_points = invariants(rho_pts).cols();
    auto rho_other = induced_action_on_h(ce, other_action, 2);
    rep.dim_h2_lie_other = invariants(rho_other).cols();

    // semidirect D = other x| points via the matched-pair machinery
    std::vector<std::vector<int>> ar(in.points.order(), std::vector<int>(in.other.order()));
    for (int p = 0; p < in.points.order(); ++p)
        for (int o = 0; o < in.other.order(); ++o) ar[p][o] = p;
    GroupMatchedPair dpair = GroupMatchedPair::validate(in.points, in.other, in.act_on_other, ar);
    BismashGroup dgrp(dpair);

    // action of D on the Lie algebra: (o, p) acts by act_other[o]*act_points[p]
    std::vector<RationalMatrix> dmats;
    for (int h = 0; h < dgrp.group().order(); ++h)
        dmats.push_back(in.act_other[dgrp.n_part(h)] * in.act_points[dgrp.t_part(h)]);
    LieGroupAction d_action{dgrp.group(), dmats};
    try {
        d_action.validate(in.lie);
    } catch (const AlgebraError&) {
        throw AlgebraError("ActionsIncompatible",
                           "the two actions do not assemble over the semidirect product");
    }
    auto rho_d = induced_action_on_h(ce, d_action, 2);
    rep.dim_h2_lie_semidirect = invariants(rho_d).cols();

    rep.piece1_dim = rep.dim_h2_lie_points - rep.dim_h2_lie_semidirect;

    // group side: H^2(other, Z/m) and its points-invariant part
    CoefficientModule coeff = CoefficientModule::trivial(m);
    Presentation h2o = group_cohomology(in.other, coeff, 2);
    rep.h2_other = h2o.factors_string();
    {
        const int k = h2o.num_generators();
        if (k == 0) {
            rep.h2_other_invariant = "0";
            rep.piece2 = "0";
        } else {
            // stacked (lambda(p) - 1) over the points elements, with the
            // right precomposition action turned into a left module
            Mat64 stacked(static_cast<int>(in.points.order()) * k, k);
            std::vector<i64> tgt;
            for (int p = 0; p < in.points.order(); ++p) {
                int pinv = in.points.inv(p);
                std::vector<int> phi(in.other.order());
                for (int x = 0; x < in.other.order(); ++x) phi[x] = in.act_on_other[pinv][x];
                Mat64 lam = induced_map(in.other, in.other, phi, coeff, 2, h2o, h2o);
                for (int i = 0; i < k; ++i) {
                    for (int j = 0; j < k; ++j)
                        stacked.at(p * k + i, j) =
                            mod_reduce(lam.at(i, j) - (i == j ? 1 : 0), h2o.factors64()[i]);
                    tgt.push_back(h2o.factors64()[i]);
                }
            }
            // the invariant subgroup and the quotient by it
            i64 lcm = 2;
            for (i64 f : tgt) lcm = lcm64(lcm, f);
            Mat64 sc(stacked.rows, k);
            for (int r = 0; r < stacked.rows; ++r) {
                i64 scale = lcm / tgt[r];
                for (int c = 0; c < k; ++c) sc.at(r, c) = mod_reduce(stacked.at(r, c) * scale, lcm);
            }
            std::vector<std::vector<i64>> inv_gens = kernel_mod(sc, lcm);
            for (int i = 0; i < k; ++i) {
                std::vector<i64> e(k, 0);
                e[i] = h2o.factors64()[i];
                inv_gens.push_back(std::move(e));
            }
            for (auto& g2 : inv_gens)
                for (int i = 0; i < k; ++i) g2[i] = mod_reduce(g2[i], h2o.factors64()[i]);
            Subgroup inv(h2o.factors64(), inv_gens);
            rep.h2_other_invariant = inv.factors_string();

            std::vector<std::vector<i64>> zgens;
            for (int i = 0; i < k; ++i) {
                std::vector<i64> e(k, 0);
                e[i] = 1;
                zgens.push_back(std::move(e));
            }
            DiagModule amb;
            amb.moduli = h2o.factors64();
            Presentation q = subquotient_presentation(zgens, inv_gens, amb);
            rep.piece2 = q.factors_string();
        }
    }

    rep.coprime = gcd64(in.points.order(), in.other.order()) == 1;
    rep.phi_iso = rep.coprime;
    rep.notes.push_back("H^{1,2} on the Lie side vanishes: H^2 of the Lie algebra is a "
                        "Q-vector space, hence uniquely divisible, and the acting group is "
                        "finite");
    rep.notes.push_back("single-bidegree part of the group-side H^2 is trivial by the "
                        "smash-product decomposition, taken as input");

    std::ostringstream conc;
    std::string mpname = in.lie_side_is_T
                             ? "H^2(U(g) x| k[" + in.points.name() + "], k[" + in.other.name() + "])"
                             : "H^2(k[" + in.other.name() + "], U(g) x| k[" + in.points.name() + "])";
    if (rep.coprime) {
        conc << mpname << " ~ Q^" << rep.piece1_dim;
        if (rep.piece2 != "0") conc << " + " << rep.piece2;
        conc << " (comparison map is an isomorphism; |" << in.points.name() << "| and |"
             << in.other.name() << "| are coprime)";
        if (rep.piece1_dim > 0 && rep.piece2 == "0")
            conc << "; the Lie-side map delta_" << (in.lie_side_is_T ? "N" : "T")
                 << " is an isomorphism onto it";
    } else {
        conc << "pieces Q^" << rep.piece1_dim << " and " << rep.piece2 << " inject into "
             << mpname << "; orders not coprime, the sequence does not determine it here";
    }
    rep.conclusion = conc.str();
    return rep;
}

} // namespace bicross
