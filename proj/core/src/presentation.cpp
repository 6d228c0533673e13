#include "bicross/presentation.hpp"

#include "bicross/errors.hpp"

#include <cassert>
#include <sstream>

namespace bicross {

mpz_class Presentation::order() const {
    mpz_class o = 1;
    for (const auto& f : m_factors) o *= f;
    return o;
}

std::string Presentation::factors_string() const {
    if (m_factors.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < m_factors.size(); ++i)
        os << (i ? " + " : "") << "Z/" << m_factors[i].get_str();
    return os.str();
}

std::vector<i64> Presentation::factors64() const {
    std::vector<i64> out;
    out.reserve(m_factors.size());
    for (const auto& f : m_factors) out.push_back(f.get_si());
    return out;
}

Presentation Presentation::trivial(const DiagModule& ambient) {
    Presentation p;
    p.m_ambient = ambient;
    return p;
}

std::vector<mpz_class> Presentation::reduce(const std::vector<i64>& ambient_elt) const {
    assert(static_cast<int>(ambient_elt.size()) == m_ambient.rank());
    const int n = m_ambient.rank();
    if (m_factors.empty()) return {};
    // y = B^{-1} x with B = Uinv_K * diag(dK): y_i = (UK x)_i / dK_i; the
    // mod-Msq representative determines y mod Mstar, which is all the
    // quotient coordinates depend on.
    std::vector<i64> w(n, 0);
    for (int i = 0; i < n; ++i) {
        i64 acc = 0;
        for (int j = 0; j < n; ++j)
            acc = mod_reduce(acc + m_UK.at(i, j) * mod_reduce(ambient_elt[j], m_Msq), m_Msq);
        w[i] = acc;
    }
    std::vector<i64> y(n);
    for (int i = 0; i < n; ++i) {
        if (w[i] % m_dK[i] != 0)
            throw AlgebraError("NotInKernel", "element is not a cocycle of the complex");
        y[i] = mod_reduce(w[i] / m_dK[i], m_Mstar);
    }
    std::vector<mpz_class> out(m_keep.size());
    for (size_t k = 0; k < m_keep.size(); ++k) {
        int i = m_keep[k];
        i64 acc = 0;
        for (int j = 0; j < n; ++j) acc = mod_reduce(acc + m_UW.at(i, j) * y[j], m_Mstar);
        out[k] = acc % m_all_factors[i];
    }
    return out;
}

std::vector<i64> Presentation::reduce64(const std::vector<i64>& ambient_elt) const {
    std::vector<mpz_class> c = reduce(ambient_elt);
    std::vector<i64> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = c[i].get_si();
    return out;
}

std::vector<i64> Presentation::lift(const std::vector<i64>& coords) const {
    assert(coords.size() == m_factors.size());
    const int n = m_ambient.rank();
    std::vector<i64> out(n, 0);
    for (size_t g = 0; g < m_gens.size(); ++g) {
        if (coords[g] == 0) continue;
        for (int i = 0; i < n; ++i)
            out[i] = mod_reduce(out[i] + coords[g] * m_gens[g][i], m_ambient.moduli[i]);
    }
    return out;
}

Presentation homology_at(const Mat64& d_in, const Mat64& d_out, const DiagModule& mod_in,
                         const DiagModule& mod_mid, const DiagModule& mod_out) {
    const int n = mod_mid.rank();
    assert(d_out.cols == n && d_in.rows == n);
    assert(d_in.cols == mod_in.rank() && d_out.rows == mod_out.rank());

    if (!map_well_defined(d_in, mod_in.moduli, mod_mid.moduli))
        throw AlgebraError("CompositionNotZero", "d_in is not well defined on the relations");
    if (!map_well_defined(d_out, mod_mid.moduli, mod_out.moduli))
        throw AlgebraError("CompositionNotZero", "d_out is not well defined on the relations");

    // d_out * d_in == 0 over the target relations
    for (int c = 0; c < d_in.cols; ++c) {
        std::vector<i64> col(n);
        for (int r = 0; r < n; ++r) col[r] = d_in.at(r, c);
        std::vector<i64> img = d_out.apply_mod(col, mod_out.moduli.empty() ? 2 : mod_out.lcm());
        for (int r = 0; r < d_out.rows; ++r)
            if (mod_reduce(img[r], mod_out.moduli[r]) != 0)
                throw AlgebraError("CompositionNotZero",
                                   "(d_out . d_in) column " + std::to_string(c) +
                                       " row " + std::to_string(r));
    }

    if (n == 0) return Presentation::trivial(mod_mid);

    // Kernel of d_out into mixed moduli: scale row j by L/out_j, kernel mod L.
    i64 L = lcm64(mod_mid.lcm(), mod_out.moduli.empty() ? 1 : mod_out.lcm());
    if (L < 2) L = 2;
    Mat64 scaled(d_out.rows, n);
    for (int r = 0; r < d_out.rows; ++r) {
        i64 s = L / mod_out.moduli[r];
        for (int c = 0; c < n; ++c) scaled.at(r, c) = mod_reduce(d_out.at(r, c) * s, L);
    }
    std::vector<std::vector<i64>> kgens = kernel_mod(scaled, L);

    std::vector<std::vector<i64>> bgens;
    bgens.reserve(d_in.cols);
    for (int c = 0; c < d_in.cols; ++c) {
        std::vector<i64> col(n);
        for (int i = 0; i < n; ++i) col[i] = mod_reduce(d_in.at(i, c), mod_mid.moduli[i]);
        bgens.push_back(std::move(col));
    }
    return subquotient_presentation(kgens, bgens, mod_mid);
}

Presentation subquotient_presentation(const std::vector<std::vector<i64>>& z_gens,
                                      const std::vector<std::vector<i64>>& b_gens,
                                      const DiagModule& ambient) {
    Presentation p;
    p.m_ambient = ambient;
    const int n = ambient.rank();
    if (n == 0) return p;
    i64 mstar = ambient.lcm();
    if (mstar < 2) return p;
    if (mstar > (1ll << 15))
        throw AlgebraError("BadModulus", "ambient exponent too large for the presentation engine");
    i64 msq = mstar * mstar;
    p.m_Mstar = mstar;
    p.m_Msq = msq;

    // Cocycle lattice K = lift(Z gens) + relation lattice, diagonalized
    // mod Mstar^2 (Z^n/K is killed by Mstar, so this loses nothing).
    Mat64 kmat(n, static_cast<int>(z_gens.size()) + n);
    for (size_t g = 0; g < z_gens.size(); ++g)
        for (int i = 0; i < n; ++i)
            kmat.at(i, static_cast<int>(g)) = mod_reduce(z_gens[g][i], ambient.moduli[i]);
    for (int i = 0; i < n; ++i) kmat.at(i, static_cast<int>(z_gens.size()) + i) = ambient.moduli[i];
    DiagonalFormMod K = diagonalize_mod(kmat, msq);
    for (int i = 0; i < n; ++i)
        if (mstar % K.d[i] != 0)
            throw AlgebraError("InternalError", "cocycle lattice not killed by the exponent");
    p.m_UK = std::move(K.U);
    p.m_dK = std::move(K.d);

    // W = B^{-1} * (B gens + relation lattice), coordinates mod Mstar.
    const int bc = static_cast<int>(b_gens.size()) + n;
    Mat64 w(n, bc);
    for (int c = 0; c < bc; ++c) {
        std::vector<i64> col(n, 0);
        if (c < static_cast<int>(b_gens.size())) {
            for (int i = 0; i < n; ++i) col[i] = mod_reduce(b_gens[c][i], ambient.moduli[i]);
        } else {
            col[c - static_cast<int>(b_gens.size())] = ambient.moduli[c - static_cast<int>(b_gens.size())];
        }
        for (int i = 0; i < n; ++i) {
            i64 acc = 0;
            for (int j = 0; j < n; ++j) acc = mod_reduce(acc + p.m_UK.at(i, j) * col[j], msq);
            if (acc % p.m_dK[i] != 0)
                throw AlgebraError("CompositionNotZero",
                                   "coboundaries do not lie in the cocycle lattice");
            w.at(i, c) = mod_reduce(acc / p.m_dK[i], mstar);
        }
    }
    DiagonalFormMod W = diagonalize_mod(w, mstar);
    p.m_UW = std::move(W.U);
    p.m_all_factors = std::move(W.d);
    for (int i = 0; i < n; ++i)
        if (p.m_all_factors[i] > 1) p.m_keep.push_back(i);
    for (int i : p.m_keep) p.m_factors.push_back(mpz_class(static_cast<long>(p.m_all_factors[i])));

    // Generators: B * (UWinv e_idx) = UKinv * diag(dK) * UWinv e_idx.
    for (int idx : p.m_keep) {
        std::vector<i64> w1(n), w2(n), g(n);
        for (int i = 0; i < n; ++i) w1[i] = W.Uinv.at(i, idx);
        for (int i = 0; i < n; ++i) w2[i] = mod_reduce(p.m_dK[i] * w1[i], msq);
        for (int i = 0; i < n; ++i) {
            i64 acc = 0;
            for (int j = 0; j < n; ++j) acc = mod_reduce(acc + K.Uinv.at(i, j) * w2[j], msq);
            g[i] = mod_reduce(acc, ambient.moduli[i]);
        }
        p.m_gens.push_back(std::move(g));
    }
    return p;
}

Presentation homology_at(const Mat64& d_in, const Mat64& d_out, i64 m) {
    return homology_at(d_in, d_out, DiagModule::uniform(d_in.cols, m),
                       DiagModule::uniform(d_in.rows, m), DiagModule::uniform(d_out.rows, m));
}

std::optional<std::vector<i64>> solve_mod(const Mat64& a, const std::vector<i64>& b, i64 m) {
    assert(static_cast<int>(b.size()) == a.rows);
    const int R = a.rows;
    const int C0 = a.cols;
    if (C0 == 0) {
        for (i64 v : b)
            if (mod_reduce(v, m) != 0) return std::nullopt;
        return std::vector<i64>{};
    }
    // Solve over Z against [A | mI]: A x + m y = b is the same congruence,
    // and the identity block keeps the Smith pivots bounded by m.
    const int C = C0 + R;
    IntMatrix ai(R, C);
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C0; ++j) ai.at(i, j) = mod_reduce(a.at(i, j), m);
        ai.at(i, C0 + i) = m;
    }
    SmithForm s = smith_normal_form(ai);
    IntMatrix bi(R, 1);
    for (int i = 0; i < R; ++i) bi.at(i, 0) = b[i];
    IntMatrix c = s.U * bi;
    mpz_class M(static_cast<long>(m));
    std::vector<mpz_class> y(C, 0);
    int nd = std::min(R, C);
    for (int i = 0; i < R; ++i) {
        mpz_class ci;
        mpz_fdiv_r(ci.get_mpz_t(), c.at(i, 0).get_mpz_t(), M.get_mpz_t());
        mpz_class di = (i < nd) ? s.D.at(i, i) : mpz_class(0);
        if (di == 0) {
            if (ci != 0) return std::nullopt;
            continue;
        }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), di.get_mpz_t(), M.get_mpz_t());
        if (ci % g != 0) return std::nullopt;
        // minimal nonnegative solution of (di/g) y == ci/g  (mod M/g)
        mpz_class mg = M / g, dg = di / g, cg = ci / g, inv;
        if (mg == 1) {
            y[i] = 0;
            continue;
        }
        if (mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), mg.get_mpz_t()) == 0)
            return std::nullopt; // cannot happen: dg is a unit mod mg
        mpz_class yi = (cg * inv) % mg;
        if (yi < 0) yi += mg;
        y[i] = yi;
    }
    // x = the A-block coordinates of V y, mod m
    IntMatrix ym(C, 1);
    for (int i = 0; i < C; ++i) ym.at(i, 0) = y[i];
    IntMatrix x = s.V * ym;
    std::vector<i64> out(C0);
    for (int i = 0; i < C0; ++i) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), x.at(i, 0).get_mpz_t(), M.get_mpz_t());
        out[i] = r.get_si();
    }
    return out;
}

// --------------------------------------------------------------- subgroups

bool map_well_defined(const Mat64& map, const std::vector<i64>& source_moduli,
                      const std::vector<i64>& target_moduli) {
    assert(map.cols == static_cast<int>(source_moduli.size()));
    assert(map.rows == static_cast<int>(target_moduli.size()));
    for (int c = 0; c < map.cols; ++c)
        for (int r = 0; r < map.rows; ++r)
            if (mod_reduce(map.at(r, c) * source_moduli[c], target_moduli[r]) != 0) return false;
    return true;
}

Subgroup::Subgroup(std::vector<i64> ambient_moduli, const std::vector<std::vector<i64>>& gens)
    : m_moduli(std::move(ambient_moduli)) {
    const int k = static_cast<int>(m_moduli.size());
    i64 L = 1;
    for (i64 o : m_moduli) L = lcm64(L, o);
    m_lcm = L < 2 ? 2 : L;
    if (k == 0) return;
    // embed e_i -> (L/o_i) e_i into (Z/L)^k
    HowellForm h(k, 0, m_lcm);
    for (const auto& g : gens) {
        assert(static_cast<int>(g.size()) == k);
        std::vector<i64> row(k);
        for (int i = 0; i < k; ++i) row[i] = mod_reduce(g[i] * (m_lcm / m_moduli[i]), m_lcm);
        h.add_row(std::move(row));
        m_gens.push_back(g);
    }
    h.finalize();
    m_form = std::move(h);
}

bool Subgroup::contains(const std::vector<i64>& coords) const {
    const int k = static_cast<int>(m_moduli.size());
    if (k == 0) return true;
    std::vector<i64> row(k);
    for (int i = 0; i < k; ++i) row[i] = mod_reduce(coords[i] * (m_lcm / m_moduli[i]), m_lcm);
    return m_form->spans(row);
}

bool Subgroup::operator==(const Subgroup& rhs) const {
    if (m_moduli != rhs.m_moduli) return false;
    if (m_moduli.empty()) return true;
    return *m_form == *rhs.m_form;
}

bool Subgroup::is_trivial() const { return m_moduli.empty() || m_form->rows().empty(); }

unsigned long long Subgroup::order() const {
    if (m_moduli.empty()) return 1;
    return m_form->span_size();
}

std::vector<mpz_class> Subgroup::invariant_factors() const {
    const int k = static_cast<int>(m_moduli.size());
    if (k == 0 || m_form->rows().empty()) return {};
    // S = (lift of embedded generators + L Z^k) / L Z^k
    const auto& rows = m_form->rows();
    IntMatrix gens(k, static_cast<int>(rows.size()) + k);
    for (size_t g = 0; g < rows.size(); ++g)
        for (int i = 0; i < k; ++i) gens.at(i, static_cast<int>(g)) = rows[g][i];
    for (int i = 0; i < k; ++i) gens.at(i, static_cast<int>(rows.size()) + i) = m_lcm;
    LatticeBasis B = lattice_basis(gens);
    IntMatrix lambda(k, k);
    for (int i = 0; i < k; ++i) lambda.at(i, i) = m_lcm;
    IntMatrix w;
    if (!B.solve(lambda, w))
        throw AlgebraError("InternalError", "relation lattice escapes the subgroup lattice");
    return smith_normal_form(w).invariant_factors();
}

std::string Subgroup::factors_string() const {
    auto f = invariant_factors();
    if (f.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < f.size(); ++i) os << (i ? " + " : "") << "Z/" << f[i].get_str();
    return os.str();
}

Subgroup kernel_subgroup(const Mat64& map, const std::vector<i64>& source_moduli,
                         const std::vector<i64>& target_moduli) {
    const int k = static_cast<int>(source_moduli.size());
    if (!map_well_defined(map, source_moduli, target_moduli))
        throw AlgebraError("MapNotWellDefined", "relations not respected");
    if (k == 0) return Subgroup({}, {});
    i64 L = 1;
    for (i64 o : source_moduli) L = lcm64(L, o);
    for (i64 o : target_moduli) L = lcm64(L, o);
    if (L < 2) L = 2;
    std::vector<std::vector<i64>> gens;
    if (map.rows == 0) {
        // no constraints; kernel is everything
        for (int i = 0; i < k; ++i) {
            std::vector<i64> e(k, 0);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
    } else {
        Mat64 scaled(map.rows, k);
        for (int r = 0; r < map.rows; ++r) {
            i64 s = L / target_moduli[r];
            for (int c = 0; c < k; ++c) scaled.at(r, c) = mod_reduce(map.at(r, c) * s, L);
        }
        gens = kernel_mod(scaled, L);
        // relation generators are in the kernel since the map is well defined
        for (int i = 0; i < k; ++i) {
            std::vector<i64> e(k, 0);
            e[i] = source_moduli[i];
            gens.push_back(std::move(e));
        }
    }
    for (auto& g : gens)
        for (int i = 0; i < k; ++i) g[i] = mod_reduce(g[i], source_moduli[i]);
    return Subgroup(source_moduli, gens);
}

Subgroup image_subgroup(const Mat64& map, const std::vector<i64>& target_moduli) {
    std::vector<std::vector<i64>> gens;
    for (int c = 0; c < map.cols; ++c) {
        std::vector<i64> g(map.rows);
        for (int r = 0; r < map.rows; ++r) g[r] = mod_reduce(map.at(r, c), target_moduli[r]);
        gens.push_back(std::move(g));
    }
    return Subgroup(target_moduli, gens);
}

} // namespace bicross
