#include "bicross/kac.hpp"

#include "bicross/errors.hpp"

#include <cassert>
#include <sstream>

namespace bicross {

namespace {

std::string factors_to_string(const std::vector<mpz_class>& f) {
    if (f.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < f.size(); ++i) os << (i ? " + " : "") << "Z/" << f[i].get_str();
    return os.str();
}

std::vector<i64> concat(const std::vector<i64>& a, const std::vector<i64>& b) {
    std::vector<i64> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

KacEngine::KacEngine(const GroupMatchedPair& mp, i64 m, PsiConvention conv, long size_guard,
                     int h3_full_limit)
    : m_mp(mp), m_bis(mp), m_m(m), m_conv(conv), m_guard(size_guard) {
    const int ho = m_bis.group().order();
    m_h3_full = ho <= h3_full_limit;
    // Membership mode only ever builds d^0..d^2 of H; the degree-3 cocycle
    // checks fall back to the direct evaluator there.
    m_hcx = std::make_unique<GroupCochainComplex>(m_bis.group(), CoefficientModule::trivial(m),
                                                  m_h3_full ? 3 : 2, true, size_guard);
    m_tcx = std::make_unique<GroupCochainComplex>(mp.T(), CoefficientModule::trivial(m), 3, true,
                                                  size_guard);
    m_ncx = std::make_unique<GroupCochainComplex>(mp.N(), CoefficientModule::trivial(m), 3, true,
                                                  size_guard);
    m_mpcx = std::make_unique<MPDoubleComplex>(mp, m, 3, 3, size_guard);
}

int KacEngine::h_index(int n, int t) const { return m_bis.index_of(n, t); }

void KacEngine::require_cocycle(const std::vector<i64>& f, int degree, const char* who) const {
    if (!is_h_cocycle(f, degree))
        throw AlgebraError("NotACocycle", std::string(who) + ": input is not a degree-" +
                                              std::to_string(degree) + " cocycle");
}

bool KacEngine::is_h_cocycle(const std::vector<i64>& f, int degree) const {
    if (degree > m_hcx->n_max()) return is_group_cocycle(*m_hcx, f, degree);
    const Mat64& d = m_hcx->differential(degree);
    for (i64 v : d.apply_mod(f, m_m))
        if (v != 0) return false;
    return true;
}

std::vector<std::vector<i64>> KacEngine::h_cocycle_basis(int degree) const {
    return kernel_mod(m_hcx->differential(degree), m_m);
}

bool KacEngine::h_coboundary(const std::vector<i64>& f, int degree) const {
    assert(degree == 2 || degree == 3);
    auto& solver = degree == 2 ? m_b2_solver : m_b3_solver;
    {
        std::lock_guard<std::mutex> hold(m_solver_lock);
        if (!solver)
            solver = std::make_unique<ModSolver>(m_hcx->differential(degree - 1), m_m);
    }
    return solver->image_contains(f);
}

std::pair<std::vector<i64>, std::vector<i64>> KacEngine::res2(const std::vector<i64>& f,
                                                              int degree) const {
    require_cocycle(f, degree, "res2");
    const int ot = m_mp.T().order(), on = m_mp.N().order();
    std::vector<i64> ft(m_tcx->rank(degree), 0), fn(m_ncx->rank(degree), 0);
    std::vector<int> htup(degree);
    {
        std::vector<int> idx(degree, 1);
        if (ot > 1) for (;;) {
            for (int k = 0; k < degree; ++k) htup[k] = h_index(0, idx[k]);
            ft[m_tcx->tuple_index(idx)] = f[m_hcx->tuple_index(htup)];
            int i = degree - 1;
            for (; i >= 0; --i) {
                if (++idx[i] < ot) break;
                idx[i] = 1;
            }
            if (i < 0) break;
        }
    }
    {
        std::vector<int> idx(degree, 1);
        if (on > 1) for (;;) {
            for (int k = 0; k < degree; ++k) htup[k] = h_index(idx[k], 0);
            fn[m_ncx->tuple_index(idx)] = f[m_hcx->tuple_index(htup)];
            int i = degree - 1;
            for (; i >= 0; --i) {
                if (++idx[i] < on) break;
                idx[i] = 1;
            }
            if (i < 0) break;
        }
    }
    return {std::move(ft), std::move(fn)};
}

std::vector<i64> KacEngine::delta_pair_tot(const std::vector<i64>& a, const std::vector<i64>& b,
                                           int degree) const {
    // a is a bar cocycle on T (= C^{degree,0}), b one on N (= C^{0,degree})
    {
        const Mat64& dt = m_tcx->differential(degree);
        for (i64 v : dt.apply_mod(a, m_m))
            if (v != 0) throw AlgebraError("NotACocycle", "delta_pair: a is not a cocycle");
        const Mat64& dn = m_ncx->differential(degree);
        for (i64 v : dn.apply_mod(b, m_m))
            if (v != 0) throw AlgebraError("NotACocycle", "delta_pair: b is not a cocycle");
    }
    auto layout = m_mpcx->tot_layout(degree + 1);
    std::vector<i64> tot(layout.rank, 0);
    if (degree == 1) {
        std::vector<i64> va = m_mpcx->delta_N(1, 0).apply_mod(a, m_m);
        std::vector<i64> vb = m_mpcx->delta_T(0, 1).apply_mod(b, m_m);
        int blk = layout.block_index(1, 1);
        for (size_t k = 0; k < va.size(); ++k)
            tot[layout.offset[blk] + k] = mod_reduce(va[k] + vb[k], m_m);
    } else if (degree == 2) {
        std::vector<i64> f2 = m_mpcx->delta_N(2, 0).apply_mod(a, m_m);
        std::vector<i64> f1 = m_mpcx->delta_T(0, 2).apply_mod(b, m_m);
        int b21 = layout.block_index(2, 1);
        int b12 = layout.block_index(1, 2);
        for (size_t k = 0; k < f2.size(); ++k) tot[layout.offset[b21] + k] = f2[k];
        for (size_t k = 0; k < f1.size(); ++k)
            tot[layout.offset[b12] + k] = mod_reduce(-f1[k], m_m);
    } else {
        throw AlgebraError("BadDegree", "delta_pair supports degrees 1 and 2");
    }
    // output must be a cocycle of the edge-deleted total complex
    Mat64 d_out = m_mpcx->total_differential(degree + 1);
    for (i64 v : d_out.apply_mod(tot, m_m))
        if (v != 0) throw AlgebraError("OutputCocycleCheckFailed", "delta_pair output");
    return tot;
}

std::vector<i64> KacEngine::phi(const std::vector<i64>& gamma) const {
    // gamma in C^{1,1} with both differentials vanishing
    assert(static_cast<int>(gamma.size()) == m_mpcx->rank(1, 1));
    for (i64 v : m_mpcx->delta_N(1, 1).apply_mod(gamma, m_m))
        if (v != 0) throw AlgebraError("NotACocycle", "phi: delta_N gamma != 0");
    for (i64 v : m_mpcx->delta_T(1, 1).apply_mod(gamma, m_m))
        if (v != 0) throw AlgebraError("NotACocycle", "phi: delta_T gamma != 0");

    const int ho = m_bis.group().order();
    std::vector<i64> f(m_hcx->rank(2), 0);
    for (int x = 1; x < ho; ++x)
        for (int y = 1; y < ho; ++y) {
            int t = m_bis.t_part(x), nprime = m_bis.n_part(y);
            if (t == 0 || nprime == 0) continue;
            f[m_hcx->tuple_index({x, y})] = gamma[m_mpcx->index_of({t}, {nprime}, 1)];
        }
    if (!is_h_cocycle(f, 2))
        throw AlgebraError("OutputCocycleCheckFailed", "phi output is not a 2-cocycle");
    return f;
}

std::vector<i64> KacEngine::psi(const std::vector<i64>& alpha21,
                                const std::vector<i64>& beta12) const {
    assert(static_cast<int>(alpha21.size()) == m_mpcx->rank(2, 1));
    assert(static_cast<int>(beta12.size()) == m_mpcx->rank(1, 2));
    const int ho = m_bis.group().order();
    std::vector<i64> f(m_hcx->rank(3), 0);
    for (int x = 1; x < ho; ++x) {
        int t = m_bis.t_part(x);
        for (int y = 1; y < ho; ++y) {
            int nprime = m_bis.n_part(y), tprime = m_bis.t_part(y);
            for (int z = 1; z < ho; ++z) {
                int nsecond = m_bis.n_part(z);
                i64 val = 0;
                // alpha(t<|n', t'; n'')
                if (nsecond != 0) {
                    int u1 = m_mp.act_right(t, nprime);
                    int u2 = tprime;
                    if (m_conv == PsiConvention::B) std::swap(u1, u2);
                    if (u1 != 0 && u2 != 0)
                        val += alpha21[m_mpcx->index_of({u1, u2}, {nsecond}, 1)];
                }
                // beta(t; n', t'|>n'')
                if (t != 0 && nprime != 0 && nsecond != 0) {
                    int v2 = m_mp.act_left(tprime, nsecond);
                    if (v2 != 0) val += beta12[m_mpcx->index_of({t}, {nprime, v2}, 2)];
                }
                if (val != 0) f[m_hcx->tuple_index({x, y, z})] = mod_reduce(val, m_m);
            }
        }
    }
    if (!is_h_cocycle(f, 3))
        throw AlgebraError("OutputCocycleCheckFailed", "psi output is not a 3-cocycle");
    return f;
}

CocycleDecomposition KacEngine::decompose_cocycle(const std::vector<i64>& f) const {
    require_cocycle(f, 2, "decompose_cocycle");
    const int ho = m_bis.group().order();
    CocycleDecomposition out;

    out.g_f.assign(m_hcx->rank(1), 0);
    for (int x = 1; x < ho; ++x) {
        int n = m_bis.n_part(x), t = m_bis.t_part(x);
        if (n == 0 || t == 0) continue; // f is normalized, the value is 0
        out.g_f[m_hcx->tuple_index({x})] =
            f[m_hcx->tuple_index({m_bis.index_of(n, 0), m_bis.index_of(0, t)})];
    }
    std::vector<i64> dg = m_hcx->differential(1).apply_mod(out.g_f, m_m);
    out.h.resize(f.size());
    for (size_t i = 0; i < f.size(); ++i) out.h[i] = mod_reduce(f[i] + dg[i], m_m);

    auto [ft, fn] = res2(f, 2);
    out.f_T = std::move(ft);
    out.f_N = std::move(fn);

    out.f_c.assign(m_mpcx->rank(1, 1), 0);
    for (int t = 1; t < m_mp.T().order(); ++t)
        for (int n = 1; n < m_mp.N().order(); ++n) {
            i64 v = f[m_hcx->tuple_index({m_bis.index_of(0, t), m_bis.index_of(n, 0)})];
            int an = m_mp.act_left(t, n), at = m_mp.act_right(t, n);
            v -= f[m_hcx->tuple_index({m_bis.index_of(an, 0), m_bis.index_of(0, at)})];
            out.f_c[m_mpcx->index_of({t}, {n}, 1)] = mod_reduce(v, m_m);
        }

    // identities of the decomposition, checked entry-wise
    auto [ht, hn] = res2(out.h, 2);
    if (ht != out.f_T || hn != out.f_N)
        throw AlgebraError("InternalError", "decompose: h restricts differently from f");
    for (int n = 1; n < m_mp.N().order(); ++n)
        for (int t = 1; t < m_mp.T().order(); ++t) {
            if (out.h[m_hcx->tuple_index({m_bis.index_of(n, 0), m_bis.index_of(0, t)})] != 0)
                throw AlgebraError("InternalError", "decompose: h does not vanish on N x T");
            i64 htn = out.h[m_hcx->tuple_index({m_bis.index_of(0, t), m_bis.index_of(n, 0)})];
            if (htn != out.f_c[m_mpcx->index_of({t}, {n}, 1)])
                throw AlgebraError("InternalError", "decompose: h on T x N differs from f_c");
        }
    // g_h = 0 and the product formula for h
    const int on = m_mp.N().order(), ot = m_mp.T().order();
    for (int n1 = 0; n1 < on; ++n1)
        for (int t1 = 0; t1 < ot; ++t1)
            for (int n2 = 0; n2 < on; ++n2)
                for (int t2 = 0; t2 < ot; ++t2) {
                    int x = m_bis.index_of(n1, t1), y = m_bis.index_of(n2, t2);
                    if (x == 0 || y == 0) continue;
                    i64 want = 0;
                    int u1 = m_mp.act_right(t1, n2); // f_T(t1<|n2, t2)
                    if (u1 != 0 && t2 != 0) want += out.f_T[m_tcx->tuple_index({u1, t2})];
                    int v2 = m_mp.act_left(t1, n2); // f_N(n1, t1|>n2)
                    if (n1 != 0 && v2 != 0) want += out.f_N[m_ncx->tuple_index({n1, v2})];
                    if (t1 != 0 && n2 != 0) want += out.f_c[m_mpcx->index_of({t1}, {n2}, 1)];
                    if (mod_reduce(want, m_m) != out.h[m_hcx->tuple_index({x, y})])
                        throw AlgebraError("InternalError", "decompose: product formula fails");
                }
    return out;
}

std::vector<i64> KacEngine::assemble_cocycle(const std::vector<i64>& a, const std::vector<i64>& b,
                                             const std::vector<i64>& gamma) const {
    // compatibility: delta_N a = delta_T gamma and delta_T b = delta_N gamma
    {
        std::vector<i64> lhs = m_mpcx->delta_N(2, 0).apply_mod(a, m_m);
        std::vector<i64> rhs = m_mpcx->delta_T(1, 1).apply_mod(gamma, m_m);
        if (lhs != rhs) throw AlgebraError("CompatibilityFailed", "delta_N a != delta_T gamma");
        lhs = m_mpcx->delta_T(0, 2).apply_mod(b, m_m);
        rhs = m_mpcx->delta_N(1, 1).apply_mod(gamma, m_m);
        if (lhs != rhs) throw AlgebraError("CompatibilityFailed", "delta_T b != delta_N gamma");
    }
    const int on = m_mp.N().order(), ot = m_mp.T().order();
    std::vector<i64> f(m_hcx->rank(2), 0);
    for (int n1 = 0; n1 < on; ++n1)
        for (int t1 = 0; t1 < ot; ++t1)
            for (int n2 = 0; n2 < on; ++n2)
                for (int t2 = 0; t2 < ot; ++t2) {
                    int x = m_bis.index_of(n1, t1), y = m_bis.index_of(n2, t2);
                    if (x == 0 || y == 0) continue;
                    i64 v = 0;
                    int u1 = m_mp.act_right(t1, n2);
                    if (u1 != 0 && t2 != 0) v += a[m_tcx->tuple_index({u1, t2})];
                    int w2 = m_mp.act_left(t1, n2);
                    if (n1 != 0 && w2 != 0) v += b[m_ncx->tuple_index({n1, w2})];
                    if (t1 != 0 && n2 != 0) v -= gamma[m_mpcx->index_of({t1}, {n2}, 1)];
                    f[m_hcx->tuple_index({x, y})] = mod_reduce(v, m_m);
                }
    if (!is_h_cocycle(f, 2))
        throw AlgebraError("OutputCocycleCheckFailed", "assemble output is not a 2-cocycle");
    return f;
}

KacSequenceReport verify_kac_exactness(const GroupMatchedPair& mp, i64 m,
                                       KacEngine::PsiConvention conv, long size_guard,
                                       int h3_full_limit) {
    KacEngine eng(mp, m, conv, size_guard, h3_full_limit);
    return eng.verify();
}

KacSequenceReport KacEngine::verify() {
    KacSequenceReport rep;
    rep.modulus = m_m;
    rep.h3_presented = m_h3_full;

    // ---- the seven groups ----
    Presentation h1H = homology_at(m_hcx->differential(0), m_hcx->differential(1), m_m);
    Presentation h2H = homology_at(m_hcx->differential(1), m_hcx->differential(2), m_m);
    Presentation h1T = homology_at(m_tcx->differential(0), m_tcx->differential(1), m_m);
    Presentation h2T = homology_at(m_tcx->differential(1), m_tcx->differential(2), m_m);
    Presentation h1N = homology_at(m_ncx->differential(0), m_ncx->differential(1), m_m);
    Presentation h2N = homology_at(m_ncx->differential(1), m_ncx->differential(2), m_m);
    MPCohomology mp1 = matched_pair_cohomology(m_mp, m_m, 1, m_guard);
    MPCohomology mp2 = matched_pair_cohomology(m_mp, m_m, 2, m_guard);
    Presentation h3H;
    if (m_h3_full) h3H = homology_at(m_hcx->differential(2), m_hcx->differential(3), m_m);

    std::vector<i64> sum1 = concat(h1T.factors64(), h1N.factors64());
    std::vector<i64> sum2 = concat(h2T.factors64(), h2N.factors64());

    rep.group_names = {"H^1(H)", "H^1(T)+H^1(N)", "MPH^1", "H^2(H)",
                       "H^2(T)+H^2(N)", "MPH^2", "H^3(H)"};
    rep.group_factors = {h1H.factors_string(),
                         h1T.factors_string() + " | " + h1N.factors_string(),
                         mp1.pres.factors_string(),
                         h2H.factors_string(),
                         h2T.factors_string() + " | " + h2N.factors_string(),
                         mp2.pres.factors_string(),
                         m_h3_full ? h3H.factors_string() : std::string("(not presented)")};

    auto well_defined = [&](const Mat64& mat, const std::vector<i64>& src,
                            const std::vector<i64>& tgt, const char* name) {
        if (!map_well_defined(mat, src, tgt)) throw AlgebraError("MapNotWellDefined", name);
    };

    // ---- the six maps in presentation coordinates ----
    Mat64 res1(static_cast<int>(sum1.size()), h1H.num_generators());
    for (int g = 0; g < h1H.num_generators(); ++g) {
        auto [ft, fn] = res2(h1H.generators()[g], 1);
        auto ct = h1T.reduce64(ft);
        auto cn = h1N.reduce64(fn);
        for (size_t r = 0; r < ct.size(); ++r) res1.at(static_cast<int>(r), g) = ct[r];
        for (size_t r = 0; r < cn.size(); ++r)
            res1.at(static_cast<int>(ct.size() + r), g) = cn[r];
    }
    well_defined(res1, h1H.factors64(), sum1, "res2^1");

    Mat64 dd1(mp1.pres.num_generators(), static_cast<int>(sum1.size()));
    {
        std::vector<i64> zero_t(m_tcx->rank(1), 0), zero_n(m_ncx->rank(1), 0);
        int col = 0;
        for (const auto& a : h1T.generators()) {
            auto coords = mp1.pres.reduce64(delta_pair_tot(a, zero_n, 1));
            for (int r = 0; r < dd1.rows; ++r) dd1.at(r, col) = coords[r];
            ++col;
        }
        for (const auto& b : h1N.generators()) {
            auto coords = mp1.pres.reduce64(delta_pair_tot(zero_t, b, 1));
            for (int r = 0; r < dd1.rows; ++r) dd1.at(r, col) = coords[r];
            ++col;
        }
    }
    well_defined(dd1, sum1, mp1.pres.factors64(), "deltaN*deltaT (deg1)");

    Mat64 phim(h2H.num_generators(), mp1.pres.num_generators());
    for (int g = 0; g < mp1.pres.num_generators(); ++g) {
        // the degree-1 layout has the single block (1,1)
        auto coords = h2H.reduce64(phi(mp1.generator_classes[g].value));
        for (int r = 0; r < phim.rows; ++r) phim.at(r, g) = coords[r];
    }
    well_defined(phim, mp1.pres.factors64(), h2H.factors64(), "phi");

    Mat64 res2m(static_cast<int>(sum2.size()), h2H.num_generators());
    for (int g = 0; g < h2H.num_generators(); ++g) {
        auto [ft, fn] = res2(h2H.generators()[g], 2);
        auto ct = h2T.reduce64(ft);
        auto cn = h2N.reduce64(fn);
        for (size_t r = 0; r < ct.size(); ++r) res2m.at(static_cast<int>(r), g) = ct[r];
        for (size_t r = 0; r < cn.size(); ++r)
            res2m.at(static_cast<int>(ct.size() + r), g) = cn[r];
    }
    well_defined(res2m, h2H.factors64(), sum2, "res2^2");

    Mat64 dd2(mp2.pres.num_generators(), static_cast<int>(sum2.size()));
    {
        std::vector<i64> zero_t(m_tcx->rank(2), 0), zero_n(m_ncx->rank(2), 0);
        int col = 0;
        for (const auto& a : h2T.generators()) {
            auto coords = mp2.pres.reduce64(delta_pair_tot(a, zero_n, 2));
            for (int r = 0; r < dd2.rows; ++r) dd2.at(r, col) = coords[r];
            ++col;
        }
        for (const auto& b : h2N.generators()) {
            auto coords = mp2.pres.reduce64(delta_pair_tot(zero_t, b, 2));
            for (int r = 0; r < dd2.rows; ++r) dd2.at(r, col) = coords[r];
            ++col;
        }
    }
    well_defined(dd2, sum2, mp2.pres.factors64(), "deltaN*deltaT^{-1} (deg2)");

    // psi on the generators of the matched-pair H^2
    std::vector<std::vector<i64>> psi_cochains;
    for (int g = 0; g < mp2.pres.num_generators(); ++g) {
        const auto& cls = mp2.generator_classes[g];
        psi_cochains.push_back(psi(cls.component(2, 1, *m_mpcx), cls.component(1, 2, *m_mpcx)));
    }
    Mat64 psim;
    if (m_h3_full) {
        psim = Mat64(h3H.num_generators(), mp2.pres.num_generators());
        for (int g = 0; g < mp2.pres.num_generators(); ++g) {
            auto coords = h3H.reduce64(psi_cochains[g]);
            for (int r = 0; r < psim.rows; ++r) psim.at(r, g) = coords[r];
        }
        well_defined(psim, mp2.pres.factors64(), h3H.factors64(), "psi");
    } else {
        // membership mode: psi of each relation generator must bound
        for (int g = 0; g < mp2.pres.num_generators(); ++g) {
            i64 o = mp2.pres.factors64()[g];
            std::vector<i64> scaled(psi_cochains[g].size());
            for (size_t k = 0; k < scaled.size(); ++k)
                scaled[k] = mod_reduce(o * psi_cochains[g][k], m_m);
            if (!h_coboundary(scaled, 3))
                throw AlgebraError("MapNotWellDefined", "psi (membership mode)");
        }
    }

    rep.maps.push_back({"res2^1", res1, h1H.factors64(), sum1});
    rep.maps.push_back({"deltaN*deltaT (deg1)", dd1, sum1, mp1.pres.factors64()});
    rep.maps.push_back({"phi", phim, mp1.pres.factors64(), h2H.factors64()});
    rep.maps.push_back({"res2^2", res2m, h2H.factors64(), sum2});
    rep.maps.push_back({"deltaN*deltaT^{-1} (deg2)", dd2, sum2, mp2.pres.factors64()});
    if (m_h3_full)
        rep.maps.push_back({"psi", psim, mp2.pres.factors64(), h3H.factors64()});
    else
        rep.maps.push_back({"psi (membership mode)", Mat64(0, 0), mp2.pres.factors64(), {}});

    // ---- composite-zero sanity (sharper failure localization) ----
    auto composite_zero = [&](const Mat64& second, const Mat64& first,
                              const std::vector<i64>& tgt) {
        Mat64 c = second.mul_mod(first, m_m);
        for (int i = 0; i < c.rows; ++i)
            for (int j = 0; j < c.cols; ++j)
                if (mod_reduce(c.at(i, j), tgt[i]) != 0) return false;
        return true;
    };
    rep.composites_zero = composite_zero(dd1, res1, mp1.pres.factors64()) &&
                          composite_zero(phim, dd1, h2H.factors64()) &&
                          composite_zero(res2m, phim, sum2) &&
                          composite_zero(dd2, res2m, mp2.pres.factors64());
    if (m_h3_full) {
        rep.composites_zero = rep.composites_zero && composite_zero(psim, dd2, h3H.factors64());
    } else {
        for (int c = 0; c < dd2.cols && rep.composites_zero; ++c) {
            std::vector<i64> acc(m_hcx->rank(3), 0);
            for (int g = 0; g < static_cast<int>(psi_cochains.size()); ++g)
                for (size_t k = 0; k < acc.size(); ++k)
                    acc[k] = mod_reduce(acc[k] + dd2.at(g, c) * psi_cochains[g][k], m_m);
            if (!h_coboundary(acc, 3)) rep.composites_zero = false;
        }
    }

    // ---- exactness at the five interior positions ----
    auto position = [&](const std::string& at, const Subgroup& im, const Subgroup& ker) {
        KacPositionReport p;
        p.at = at;
        p.image_factors = factors_to_string(im.invariant_factors());
        p.kernel_factors = factors_to_string(ker.invariant_factors());
        p.exact = (im == ker);
        rep.positions.push_back(p);
        return p.exact;
    };

    {
        Subgroup kr = kernel_subgroup(res1, h1H.factors64(), sum1);
        rep.res1_injective = (kr.order() == 1);
    }
    bool ok = rep.res1_injective;
    ok &= position("H^1(T)+H^1(N)", image_subgroup(res1, sum1),
                   kernel_subgroup(dd1, sum1, mp1.pres.factors64()));
    ok &= position("MPH^1", image_subgroup(dd1, mp1.pres.factors64()),
                   kernel_subgroup(phim, mp1.pres.factors64(), h2H.factors64()));
    ok &= position("H^2(H)", image_subgroup(phim, h2H.factors64()),
                   kernel_subgroup(res2m, h2H.factors64(), sum2));
    ok &= position("H^2(T)+H^2(N)", image_subgroup(res2m, sum2),
                   kernel_subgroup(dd2, sum2, mp2.pres.factors64()));

    Subgroup im_dd2 = image_subgroup(dd2, mp2.pres.factors64());
    if (m_h3_full) {
        ok &= position("MPH^2", im_dd2,
                       kernel_subgroup(psim, mp2.pres.factors64(), h3H.factors64()));
    } else {
        // ker(psi) = {x : sum_g x_g psi_g lies in B^3(H)}: joint kernel with
        // the degree-2 differential of H, projected to the x part.
        const int k = mp2.pres.num_generators();
        const Mat64& d2 = m_hcx->differential(2);
        Mat64 joint(m_hcx->rank(3), k + d2.cols);
        for (int g = 0; g < k; ++g)
            for (int r = 0; r < joint.rows; ++r) joint.at(r, g) = psi_cochains[g][r];
        for (int c = 0; c < d2.cols; ++c)
            for (int r = 0; r < joint.rows; ++r) joint.at(r, k + c) = d2.at(r, c);
        std::vector<std::vector<i64>> gens;
        for (const auto& v : kernel_mod(joint, m_m)) gens.emplace_back(v.begin(), v.begin() + k);
        for (int g = 0; g < k; ++g) { // relation generators, verified above
            std::vector<i64> e(k, 0);
            e[g] = mp2.pres.factors64()[g];
            gens.push_back(std::move(e));
        }
        for (auto& g : gens)
            for (int i = 0; i < k; ++i) g[i] = mod_reduce(g[i], mp2.pres.factors64()[i]);
        Subgroup ker_psi(mp2.pres.factors64(), gens);
        ok &= position("MPH^2", im_dd2, ker_psi);
    }

    rep.all_exact = ok;
    return rep;
}

} // namespace bicross
