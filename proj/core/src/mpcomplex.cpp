#include "bicross/mpcomplex.hpp"

#include "bicross/barcomplex.hpp"
#include "bicross/errors.hpp"

#include <cassert>

namespace bicross {

MPDoubleComplex::MPDoubleComplex(const GroupMatchedPair& mp, i64 m, int p_max, int q_max,
                                 long size_guard)
    : m_mp(mp), m_m(m), m_p_max(p_max), m_q_max(q_max), m_guard(size_guard) {
    if (m < 2) throw AlgebraError("BadModulus", "m >= 2 required");
    m_dt.resize(static_cast<size_t>(p_max + 1) * (q_max + 1));
    m_dn.resize(m_dt.size());
    m_dt_built.assign(m_dt.size(), 0);
    m_dn_built.assign(m_dt.size(), 0);
}

void MPDoubleComplex::check_guard(int rows, int cols, int p, int q) const {
    long entries = static_cast<long>(rows) * cols;
    if (entries > m_guard)
        throw SizeGuardError("double complex block (" + std::to_string(p) + "," +
                             std::to_string(q) + ") needs " + std::to_string(entries) +
                             " entries (guard " + std::to_string(m_guard) + ")");
}

int MPDoubleComplex::t_count(int p) const {
    int c = 1;
    for (int i = 0; i < p; ++i) c *= m_mp.T().order() - 1;
    return c;
}

int MPDoubleComplex::n_count(int q) const {
    int c = 1;
    for (int i = 0; i < q; ++i) c *= m_mp.N().order() - 1;
    return c;
}

int MPDoubleComplex::index_of(const std::vector<int>& ts, const std::vector<int>& ns,
                              int q) const {
    int ti = 0, ni = 0;
    for (int e : ts) {
        assert(e != 0);
        ti = ti * (m_mp.T().order() - 1) + (e - 1);
    }
    for (int e : ns) {
        assert(e != 0);
        ni = ni * (m_mp.N().order() - 1) + (e - 1);
    }
    return ti * n_count(q) + ni;
}

std::pair<std::vector<int>, std::vector<int>> MPDoubleComplex::tuples_at(int idx, int p,
                                                                         int q) const {
    int ni = idx % n_count(q);
    int ti = idx / n_count(q);
    std::vector<int> ts(p), ns(q);
    for (int i = p - 1; i >= 0; --i) {
        ts[i] = ti % (m_mp.T().order() - 1) + 1;
        ti /= m_mp.T().order() - 1;
    }
    for (int i = q - 1; i >= 0; --i) {
        ns[i] = ni % (m_mp.N().order() - 1) + 1;
        ni /= m_mp.N().order() - 1;
    }
    return {std::move(ts), std::move(ns)};
}

const Mat64& MPDoubleComplex::delta_T(int p, int q) const {
    assert(p + 1 <= m_p_max && q <= m_q_max);
    int s = slot(p, q);
    std::lock_guard<std::mutex> hold(m_lock);
    if (!m_dt_built[s]) {
        m_dt[s] = build_delta_T(p, q);
        m_dt_built[s] = 1;
    }
    return m_dt[s];
}

const Mat64& MPDoubleComplex::delta_N(int p, int q) const {
    assert(p <= m_p_max && q + 1 <= m_q_max);
    int s = slot(p, q);
    std::lock_guard<std::mutex> hold(m_lock);
    if (!m_dn_built[s]) {
        m_dn[s] = build_delta_N(p, q);
        m_dn_built[s] = 1;
    }
    return m_dn[s];
}

// (delta_T f)(u_1..u_{p+1}; n); T-tuples are stored left-to-right, with
// the face numbering running from the right:
//   face 0   :  + f(u_1..u_p; u_{p+1} |> n)
//   face j   :  (-1)^j f(u_1,..., u_k u_{k+1}, ...; n), k = p+1-j
//   face p+1 :  (-1)^{p+1} f(u_2..u_{p+1}; n)
Mat64 MPDoubleComplex::build_delta_T(int p, int q) const {
    check_guard(rank(p + 1, q), rank(p, q), p, q);
    Mat64 d(rank(p + 1, q), rank(p, q));
    const int rows = rank(p + 1, q);
    for (int ri = 0; ri < rows; ++ri) {
        auto [ts, ns] = tuples_at(ri, p + 1, q);
        {
            std::vector<int> front(ts.begin(), ts.end() - 1);
            std::vector<int> acted = m_mp.act_left_tuple(ts[p], ns);
            int col = index_of(front, acted, q);
            d.at(ri, col) = mod_reduce(d.at(ri, col) + 1, m_m);
        }
        for (int j = 1; j <= p; ++j) {
            int k = p + 1 - j; // merge internal slots (k, k+1), 1-based
            int merged = m_mp.T().mul(ts[k - 1], ts[k]);
            if (merged == 0) continue;
            std::vector<int> t2;
            t2.reserve(p);
            for (int i = 0; i < k - 1; ++i) t2.push_back(ts[i]);
            t2.push_back(merged);
            for (int i = k + 1; i <= p; ++i) t2.push_back(ts[i]);
            int col = index_of(t2, ns, q);
            i64 s = (j % 2 == 0) ? 1 : -1;
            d.at(ri, col) = mod_reduce(d.at(ri, col) + s, m_m);
        }
        {
            std::vector<int> back(ts.begin() + 1, ts.end());
            int col = index_of(back, ns, q);
            i64 s = ((p + 1) % 2 == 0) ? 1 : -1;
            d.at(ri, col) = mod_reduce(d.at(ri, col) + s, m_m);
        }
    }
    return d;
}

// (delta_N f)(t; n_0..n_q):
//   face 0   :  + f(t <| n_0; n_1..n_q)
//   face i   :  (-1)^i f(t; ..., n_{i-1} n_i, ...)
//   face q+1 :  (-1)^{q+1} f(t; n_0..n_{q-1})
Mat64 MPDoubleComplex::build_delta_N(int p, int q) const {
    check_guard(rank(p, q + 1), rank(p, q), p, q);
    Mat64 d(rank(p, q + 1), rank(p, q));
    const int rows = rank(p, q + 1);
    for (int ri = 0; ri < rows; ++ri) {
        auto [ts, ns] = tuples_at(ri, p, q + 1);
        {
            std::vector<int> rest(ns.begin() + 1, ns.end());
            std::vector<int> acted = m_mp.act_right_tuple(ts, ns[0]);
            int col = index_of(acted, rest, q);
            d.at(ri, col) = mod_reduce(d.at(ri, col) + 1, m_m);
        }
        for (int i = 1; i <= q; ++i) {
            int merged = m_mp.N().mul(ns[i - 1], ns[i]);
            if (merged == 0) continue;
            std::vector<int> n2;
            n2.reserve(q);
            for (int k = 0; k < i - 1; ++k) n2.push_back(ns[k]);
            n2.push_back(merged);
            for (int k = i + 1; k <= q; ++k) n2.push_back(ns[k]);
            int col = index_of(ts, n2, q);
            i64 s = (i % 2 == 0) ? 1 : -1;
            d.at(ri, col) = mod_reduce(d.at(ri, col) + s, m_m);
        }
        {
            std::vector<int> front(ns.begin(), ns.end() - 1);
            int col = index_of(ts, front, q);
            i64 s = ((q + 1) % 2 == 0) ? 1 : -1;
            d.at(ri, col) = mod_reduce(d.at(ri, col) + s, m_m);
        }
    }
    return d;
}

void MPDoubleComplex::verify_identities() const {
    for (int p = 0; p + 2 <= m_p_max; ++p)
        for (int q = 0; q <= m_q_max; ++q)
            if (!delta_T(p + 1, q).mul_mod(delta_T(p, q), m_m).is_zero_mod(m_m))
                throw AlgebraError("ComplexIdentity", "delta_T^2 != 0 at (" + std::to_string(p) +
                                                          "," + std::to_string(q) + ")");
    for (int p = 0; p <= m_p_max; ++p)
        for (int q = 0; q + 2 <= m_q_max; ++q)
            if (!delta_N(p, q + 1).mul_mod(delta_N(p, q), m_m).is_zero_mod(m_m))
                throw AlgebraError("ComplexIdentity", "delta_N^2 != 0 at (" + std::to_string(p) +
                                                          "," + std::to_string(q) + ")");
    for (int p = 0; p + 1 <= m_p_max; ++p)
        for (int q = 0; q + 1 <= m_q_max; ++q) {
            Mat64 a = delta_N(p + 1, q).mul_mod(delta_T(p, q), m_m);
            Mat64 b = delta_T(p, q + 1).mul_mod(delta_N(p, q), m_m);
            if (!a.sub_mod(b, m_m).is_zero_mod(m_m))
                throw AlgebraError("ComplexIdentity", "delta_T delta_N != delta_N delta_T at (" +
                                                          std::to_string(p) + "," +
                                                          std::to_string(q) + ")");
        }
}

int MPDoubleComplex::TotLayout::block_index(int p, int q) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].first == p && blocks[i].second == q) return static_cast<int>(i);
    return -1;
}

MPDoubleComplex::TotLayout MPDoubleComplex::tot_layout(int total_degree) const {
    TotLayout l;
    for (int p = 1; p <= total_degree - 1; ++p) {
        int q = total_degree - p;
        if (q < 1) continue;
        if (p > m_p_max || q > m_q_max)
            throw AlgebraError("InsufficientBounds",
                               "need block (" + std::to_string(p) + "," + std::to_string(q) +
                                   ") beyond bounds (" + std::to_string(m_p_max) + "," +
                                   std::to_string(m_q_max) + ")");
        l.offset.push_back(l.rank);
        l.blocks.emplace_back(p, q);
        l.rank += rank(p, q);
    }
    return l;
}

Mat64 MPDoubleComplex::total_differential(int total_degree) const {
    TotLayout src = tot_layout(total_degree);
    TotLayout dst = tot_layout(total_degree + 1);
    Mat64 d(dst.rank, src.rank);
    for (size_t b = 0; b < src.blocks.size(); ++b) {
        auto [p, q] = src.blocks[b];
        // delta_T : (p,q) -> (p+1,q), no sign
        {
            int tb = dst.block_index(p + 1, q);
            if (tb >= 0) {
                const Mat64& m = delta_T(p, q);
                for (int i = 0; i < m.rows; ++i)
                    for (int j = 0; j < m.cols; ++j)
                        d.at(dst.offset[tb] + i, src.offset[b] + j) = m.at(i, j);
            }
        }
        // delta_N : (p,q) -> (p,q+1), sign (-1)^p
        {
            int tb = dst.block_index(p, q + 1);
            if (tb >= 0) {
                const Mat64& m = delta_N(p, q);
                i64 s = (p % 2 == 0) ? 1 : -1;
                for (int i = 0; i < m.rows; ++i)
                    for (int j = 0; j < m.cols; ++j)
                        d.at(dst.offset[tb] + i, src.offset[b] + j) = mod_reduce(s * m.at(i, j), m_m);
            }
        }
    }
    return d;
}

std::vector<i64> MPCohomologyClass::component(int p, int q, const MPDoubleComplex& cx) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].first == p && blocks[i].second == q) {
            int r = cx.rank(p, q);
            return std::vector<i64>(value.begin() + offsets[i], value.begin() + offsets[i] + r);
        }
    return std::vector<i64>(cx.rank(p, q), 0);
}

MPCohomology matched_pair_cohomology(const GroupMatchedPair& mp, i64 m, int i, long size_guard) {
    if (i < 1) throw AlgebraError("BadDegree", "degree must be >= 1");
    MPDoubleComplex cx(mp, m, i + 2, i + 2, size_guard);
    MPCohomology out;
    auto layout = cx.tot_layout(i + 1);
    Mat64 d_in = cx.total_differential(i);
    Mat64 d_out = cx.total_differential(i + 1);
    out.pres = homology_at(d_in, d_out, m);
    for (const auto& g : out.pres.generators()) {
        MPCohomologyClass c;
        c.degree = i;
        c.blocks = layout.blocks;
        c.offsets = layout.offset;
        c.value = g;
        out.generator_classes.push_back(std::move(c));
    }
    return out;
}

RestrictedSubgroup restricted_subgroup(const MPDoubleComplex& cx, int i, int p,
                                       const MPCohomology& full) {
    if (p < 1 || p > i) throw AlgebraError("BadDegree", "need 1 <= p <= i");
    const i64 m = cx.modulus();
    const int q = i + 1 - p;
    auto layout = cx.tot_layout(i + 1);
    int self = layout.block_index(p, q);
    assert(self >= 0);

    // Z^i_p: single-component cocycles, i.e. ker delta_T  cap  ker delta_N.
    Mat64 stacked = cx.delta_T(p, q).stacked(cx.delta_N(p, q));
    std::vector<std::vector<i64>> zgens = kernel_mod(stacked, m);

    // B^i_p: component-p images of total cocycle preimages whose other
    // components vanish.
    Mat64 d_in = cx.total_differential(i);
    std::vector<std::vector<i64>> bgens;
    {
        // split d_in into the block-(p,q) rows and the rest
        Mat64 others(d_in.rows - cx.rank(p, q), d_in.cols);
        Mat64 self_rows(cx.rank(p, q), d_in.cols);
        int ro = 0;
        for (int b = 0; b < static_cast<int>(layout.blocks.size()); ++b) {
            int r = cx.rank(layout.blocks[b].first, layout.blocks[b].second);
            for (int k = 0; k < r; ++k) {
                for (int c = 0; c < d_in.cols; ++c) {
                    if (b == self)
                        self_rows.at(k, c) = d_in.at(layout.offset[b] + k, c);
                    else
                        others.at(ro, c) = d_in.at(layout.offset[b] + k, c);
                }
                if (b != self) ++ro;
            }
        }
        for (const auto& k : kernel_mod(others, m)) bgens.push_back(self_rows.apply_mod(k, m));
    }

    RestrictedSubgroup out;
    out.pres = subquotient_presentation(zgens, bgens, DiagModule::uniform(cx.rank(p, q), m));
    // Embed generators into the full group.
    out.embedding = Mat64(full.pres.num_generators(), out.pres.num_generators());
    for (int g = 0; g < out.pres.num_generators(); ++g) {
        std::vector<i64> tot(full.pres.ambient().rank(), 0);
        const auto& gen = out.pres.generators()[g];
        for (int k = 0; k < cx.rank(p, q); ++k) tot[layout.offset[self] + k] = gen[k];
        std::vector<i64> coords = full.pres.reduce64(tot);
        for (int r = 0; r < full.pres.num_generators(); ++r) out.embedding.at(r, g) = coords[r];
    }
    return out;
}

Presentation bidegree_cohomology(const MPDoubleComplex& cx, int i, int j) {
    if (!cx.pair().right_action_trivial())
        throw AlgebraError("NonTrivialRightAction",
                           "bidegree cohomology requires the right action trivial");
    if (i < 1 || j < 1) throw AlgebraError("BadDegree", "need i, j >= 1");
    const i64 m = cx.modulus();

    // Z^{i,j} = {a : delta_N a = 0 and delta_T a = delta_N b for some b},
    // computed as the alpha-projection of the joint kernel.
    const Mat64& dn = cx.delta_N(i, j);
    const Mat64& dt = cx.delta_T(i, j);
    const Mat64& dn_b = cx.delta_N(i + 1, j - 1); // C^{i+1,j-1} -> C^{i+1,j}
    const int na = cx.rank(i, j), nb = cx.rank(i + 1, j - 1);
    Mat64 joint(dn.rows + dt.rows, na + nb);
    for (int r = 0; r < dn.rows; ++r)
        for (int c = 0; c < na; ++c) joint.at(r, c) = dn.at(r, c);
    for (int r = 0; r < dt.rows; ++r) {
        for (int c = 0; c < na; ++c) joint.at(dn.rows + r, c) = dt.at(r, c);
        for (int c = 0; c < nb; ++c)
            joint.at(dn.rows + r, na + c) = mod_reduce(-dn_b.at(r, c), m);
    }
    std::vector<std::vector<i64>> zgens;
    for (const auto& k : kernel_mod(joint, m))
        zgens.emplace_back(k.begin(), k.begin() + na);

    // B^{i,j} = delta_N C^{i,j-1} + delta_T {gamma' : delta_N gamma' = 0}.
    // Restricting gamma' to delta_N-closed cochains keeps the coboundaries
    // inside Z^{i,j} and is what matches the iterated-cohomology side: the
    // class of delta_T gamma' downstairs is the coboundary of the
    // cocycle-valued gamma'.
    const Mat64& gN = cx.delta_N(i, j - 1);
    const Mat64& gT = cx.delta_T(i - 1, j);
    std::vector<std::vector<i64>> bgens;
    for (int c = 0; c < gN.cols; ++c) {
        std::vector<i64> v(gN.rows);
        for (int r = 0; r < gN.rows; ++r) v[r] = gN.at(r, c);
        bgens.push_back(std::move(v));
    }
    for (const auto& k : kernel_mod(cx.delta_N(i - 1, j), m))
        bgens.push_back(gT.apply_mod(k, m));
    // Each surviving coboundary carries an explicit solve_mod witness.
    for (const auto& b : bgens) {
        for (i64 v : dn.apply_mod(b, m))
            if (v != 0) throw AlgebraError("InternalError", "coboundary not delta_N-closed");
        if (!solve_mod(dn_b, dt.apply_mod(b, m), m))
            throw AlgebraError("InternalError", "coboundary fails the bidegree witness");
    }
    return subquotient_presentation(zgens, bgens, DiagModule::uniform(na, m));
}

Presentation iterated_cohomology(const GroupMatchedPair& mp, i64 m, int i, int j) {
    if (!mp.right_action_trivial())
        throw AlgebraError("NonTrivialRightAction", "iterated cohomology needs a smash pair");
    const FiniteGroup& g = mp.T();
    const FiniteGroup& n = mp.N();
    CoefficientModule plain = CoefficientModule::trivial(m);
    Presentation hj = group_cohomology(n, plain, j);

    DiagModule mod;
    mod.moduli = hj.factors64();
    std::vector<Mat64> action;
    action.reserve(g.order());
    const int r = hj.num_generators();
    for (int a = 0; a < g.order(); ++a) {
        if (r == 0) {
            action.emplace_back(0, 0);
            continue;
        }
        // left module structure: act(a) pulls cocycles back along
        // n -> a^{-1} |> n
        int ainv = g.inv(a);
        std::vector<int> phi(n.order());
        for (int x = 0; x < n.order(); ++x) phi[x] = mp.act_left(ainv, x);
        action.push_back(induced_map(n, n, phi, plain, j, hj, hj));
    }
    return group_cohomology(g, CoefficientModule::with_action(std::move(mod), std::move(action)), i);
}

PiMap pi_map(const MPDoubleComplex& cx, const MPCohomology& h2) {
    if (!cx.pair().right_action_trivial())
        throw AlgebraError("NonTrivialRightAction", "pi requires the right action trivial");
    PiMap out;
    out.target = bidegree_cohomology(cx, 1, 2);
    out.matrix = Mat64(out.target.num_generators(), h2.pres.num_generators());
    const i64 m = cx.modulus();
    for (int g = 0; g < h2.pres.num_generators(); ++g) {
        std::vector<i64> f1 = h2.generator_classes[g].component(1, 2, cx);
        // representative must land in Z^{1,2}: delta_N-closed with an
        // explicit solve_mod witness for delta_T f1 = delta_N beta
        for (i64 v : cx.delta_N(1, 2).apply_mod(f1, m))
            if (v != 0) throw AlgebraError("InternalError", "pi: representative not in Z^{1,2}");
        if (!solve_mod(cx.delta_N(2, 1), cx.delta_T(1, 2).apply_mod(f1, m), m))
            throw AlgebraError("InternalError", "pi: no witness for delta_T f1 in im delta_N");
        std::vector<i64> coords = out.target.reduce64(f1);
        for (int r = 0; r < out.target.num_generators(); ++r) out.matrix.at(r, g) = coords[r];
    }
    // well-definedness: relations map to zero
    for (int g = 0; g < h2.pres.num_generators(); ++g) {
        i64 o = h2.pres.factors64()[g];
        for (int r = 0; r < out.target.num_generators(); ++r)
            if (mod_reduce(out.matrix.at(r, g) * o, out.target.factors64()[r]) != 0)
                throw AlgebraError("InternalError", "pi not well defined on relations");
    }
    return out;
}

} // namespace bicross
