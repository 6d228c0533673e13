#include "bicross/barcomplex.hpp"

#include "bicross/errors.hpp"

#include <cassert>

namespace bicross {

bool CoefficientModule::trivial_action() const {
    if (action.empty()) return true;
    const int r = rank();
    for (const auto& a : action)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                i64 want = (i == j) ? 1 : 0;
                if (mod_reduce(a.at(i, j) - want, module.moduli[i]) != 0) return false;
            }
    return true;
}

void CoefficientModule::validate(const FiniteGroup& g) const {
    if (action.empty()) return;
    if (static_cast<int>(action.size()) != g.order())
        throw AlgebraError("BadAction", "one matrix per group element required");
    const int r = rank();
    for (const auto& a : action) {
        if (a.rows != r || a.cols != r) throw AlgebraError("BadAction", "matrix shape");
        if (!map_well_defined(a, module.moduli, module.moduli))
            throw AlgebraError("BadAction", "matrix does not respect the relations");
    }
    // representation: act(a)act(b) == act(ab), act(1) == 1
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (mod_reduce(action[0].at(i, j) - (i == j ? 1 : 0), module.moduli[i]) != 0)
                throw AlgebraError("BadAction", "identity does not act as identity");
    i64 L = module.lcm();
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            Mat64 ab = action[a].mul_mod(action[b], L);
            const Mat64& c = action[g.mul(a, b)];
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    if (mod_reduce(ab.at(i, j) - c.at(i, j), module.moduli[i]) != 0)
                        throw AlgebraError("BadAction", "not a representation at (" +
                                                            std::to_string(a) + "," +
                                                            std::to_string(b) + ")");
        }
}

GroupCochainComplex::GroupCochainComplex(const FiniteGroup& g, CoefficientModule coeff, int n_max,
                                         bool normalized, long size_guard)
    : m_g(g), m_coeff(std::move(coeff)), m_n_max(n_max), m_normalized(normalized),
      m_guard(size_guard) {
    if (n_max < 1) throw AlgebraError("BadDegree", "n_max must be >= 1");
    m_coeff.validate(m_g);
    m_diff.resize(n_max + 1);
    m_built.assign(n_max + 1, false);
    long entries = static_cast<long>(rank(n_max)) * rank(n_max + 1);
    if (entries > m_guard)
        throw SizeGuardError("bar complex for |G|=" + std::to_string(g.order()) + " at degree " +
                             std::to_string(n_max) + " needs " + std::to_string(entries) +
                             " matrix entries (guard " + std::to_string(m_guard) + ")");
}

int GroupCochainComplex::tuple_count(int n) const {
    int base = m_normalized ? m_g.order() - 1 : m_g.order();
    int c = 1;
    for (int i = 0; i < n; ++i) c *= base;
    return c;
}

int GroupCochainComplex::rank(int n) const { return tuple_count(n) * m_coeff.rank(); }

DiagModule GroupCochainComplex::module_at(int n) const {
    DiagModule d;
    const int t = tuple_count(n);
    d.moduli.reserve(static_cast<size_t>(t) * m_coeff.rank());
    for (int i = 0; i < t; ++i)
        for (i64 m : m_coeff.module.moduli) d.moduli.push_back(m);
    return d;
}

int GroupCochainComplex::tuple_index(const std::vector<int>& tuple) const {
    int base = m_normalized ? m_g.order() - 1 : m_g.order();
    int idx = 0;
    for (int e : tuple) {
        int v = m_normalized ? e - 1 : e;
        assert(v >= 0 && v < base);
        idx = idx * base + v;
    }
    return idx;
}

std::vector<int> GroupCochainComplex::tuple_at(int index, int n) const {
    int base = m_normalized ? m_g.order() - 1 : m_g.order();
    std::vector<int> out(n);
    for (int i = n - 1; i >= 0; --i) {
        int v = index % base;
        out[i] = m_normalized ? v + 1 : v;
        index /= base;
    }
    return out;
}

const Mat64& GroupCochainComplex::differential(int n) const {
    assert(n >= 0 && n <= m_n_max);
    std::lock_guard<std::mutex> hold(m_lock);
    if (!m_built[n]) {
        m_diff[n] = build_differential(n);
        m_built[n] = true;
        const i64 L = m_coeff.module.lcm();
        if (n >= 1 && m_built[n - 1] && !m_diff[n].mul_mod(m_diff[n - 1], L).is_zero_mod(L))
            throw AlgebraError("ComplexIdentity", "d.d != 0 at degree " + std::to_string(n - 1));
        if (n + 1 <= m_n_max && m_built[n + 1] &&
            !m_diff[n + 1].mul_mod(m_diff[n], L).is_zero_mod(L))
            throw AlgebraError("ComplexIdentity", "d.d != 0 at degree " + std::to_string(n));
    }
    return m_diff[n];
}

Mat64 GroupCochainComplex::build_differential(int n) const {
    const int r = m_coeff.rank();
    Mat64 d(rank(n + 1), rank(n));
    const i64 L = m_coeff.module.lcm();
    const bool has_action = !m_coeff.action.empty();

    std::vector<int> tgt;
    const int tcount = tuple_count(n + 1);
    for (int ti = 0; ti < tcount; ++ti) {
        tgt = tuple_at(ti, n + 1);
        // d(f)(g1..g_{n+1}) = g1 f(g2..) + sum (-1)^i f(..gi g_{i+1}..)
        //                    + (-1)^{n+1} f(g1..gn)
        {
            std::vector<int> rest(tgt.begin() + 1, tgt.end());
            int col = tuple_index(rest);
            if (has_action) {
                const Mat64& a = m_coeff.action[tgt[0]];
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        d.at(ti * r + i, col * r + j) =
                            mod_reduce(d.at(ti * r + i, col * r + j) + a.at(i, j), L);
            } else {
                for (int i = 0; i < r; ++i)
                    d.at(ti * r + i, col * r + i) = mod_reduce(d.at(ti * r + i, col * r + i) + 1, L);
            }
        }
        for (int i = 1; i <= n; ++i) {
            int merged = m_g.mul(tgt[i - 1], tgt[i]);
            if (m_normalized && merged == m_g.id()) continue;
            std::vector<int> t2;
            t2.reserve(n);
            for (int k = 0; k < i - 1; ++k) t2.push_back(tgt[k]);
            t2.push_back(merged);
            for (int k = i + 1; k <= n; ++k) t2.push_back(tgt[k]);
            int col = tuple_index(t2);
            i64 s = (i % 2 == 0) ? 1 : -1;
            for (int k = 0; k < r; ++k)
                d.at(ti * r + k, col * r + k) = mod_reduce(d.at(ti * r + k, col * r + k) + s, L);
        }
        {
            std::vector<int> front(tgt.begin(), tgt.end() - 1);
            int col = tuple_index(front);
            i64 s = ((n + 1) % 2 == 0) ? 1 : -1;
            for (int k = 0; k < r; ++k)
                d.at(ti * r + k, col * r + k) = mod_reduce(d.at(ti * r + k, col * r + k) + s, L);
        }
    }
    return d;
}

Presentation group_cohomology(const FiniteGroup& g, const CoefficientModule& coeff, int n,
                              long size_guard) {
    if (n < 1) throw AlgebraError("BadDegree", "degree must be >= 1");
    GroupCochainComplex cx(g, coeff, n + 1, true, size_guard);
    return homology_at(cx.differential(n - 1), cx.differential(n), cx.module_at(n - 1),
                       cx.module_at(n), cx.module_at(n + 1));
}

Mat64 induced_map(const FiniteGroup& g, const FiniteGroup& g_prime, const std::vector<int>& phi,
                  const CoefficientModule& coeff, int n, const Presentation& source,
                  const Presentation& target) {
    assert(static_cast<int>(phi.size()) == g.order());
    // phi must send identity to identity for normalized pullback
    if (phi[g.id()] != g_prime.id())
        throw AlgebraError("BadHomomorphism", "phi(1) != 1");
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (phi[g.mul(a, b)] != g_prime.mul(phi[a], phi[b]))
                throw AlgebraError("BadHomomorphism",
                                   "phi not a homomorphism at (" + std::to_string(a) + "," +
                                       std::to_string(b) + ")");
    GroupCochainComplex src_cx(g_prime, coeff, std::max(n, 1));
    GroupCochainComplex tgt_cx(g, coeff, std::max(n, 1));
    const int r = coeff.rank();
    Mat64 out(target.num_generators(), source.num_generators());
    for (int gi = 0; gi < source.num_generators(); ++gi) {
        const std::vector<i64>& x = source.generators()[gi];
        std::vector<i64> y(tgt_cx.rank(n), 0);
        const int tcount = tgt_cx.tuple_count(n);
        for (int ti = 0; ti < tcount; ++ti) {
            std::vector<int> tup = tgt_cx.tuple_at(ti, n);
            bool degenerate = false;
            for (int& e : tup) {
                e = phi[e];
                if (e == g_prime.id()) degenerate = true;
            }
            if (degenerate) continue; // normalized cocycles vanish there
            int si = src_cx.tuple_index(tup);
            for (int k = 0; k < r; ++k) y[ti * r + k] = x[si * r + k];
        }
        std::vector<i64> coords = target.reduce64(y);
        for (int k = 0; k < target.num_generators(); ++k) out.at(k, gi) = coords[k];
    }
    return out;
}

Mat64 shift_coefficients(i64 m, i64 m_prime, const Presentation& source,
                         const Presentation& target) {
    if (m_prime % m != 0) throw AlgebraError("BadModulus", "m must divide m'");
    const i64 s = m_prime / m;
    Mat64 out(target.num_generators(), source.num_generators());
    for (int gi = 0; gi < source.num_generators(); ++gi) {
        const std::vector<i64>& x = source.generators()[gi];
        std::vector<i64> y(x.size());
        for (size_t i = 0; i < x.size(); ++i) y[i] = mod_reduce(x[i] * s, m_prime);
        std::vector<i64> coords = target.reduce64(y);
        for (int k = 0; k < target.num_generators(); ++k) out.at(k, gi) = coords[k];
    }
    return out;
}

std::vector<i64> eval_differential(const GroupCochainComplex& cx, const std::vector<i64>& f,
                                   int n, const std::vector<int>& tuple) {
    const int r = cx.coefficients().rank();
    const i64 L = cx.coefficients().module.lcm();
    const auto& g = cx.group();
    const bool has_action = !cx.coefficients().action.empty();
    assert(static_cast<int>(tuple.size()) == n + 1);

    // value of f at a tuple, honoring normalization by zero-extension
    auto value = [&](const std::vector<int>& t, int k) -> i64 {
        if (cx.normalized())
            for (int e : t)
                if (e == g.id()) return 0;
        return f[static_cast<size_t>(cx.tuple_index(t)) * r + k];
    };

    std::vector<i64> acc(r, 0);
    {
        std::vector<int> rest(tuple.begin() + 1, tuple.end());
        for (int i = 0; i < r; ++i) {
            if (has_action) {
                const Mat64& a = cx.coefficients().action[tuple[0]];
                i64 s = 0;
                for (int j = 0; j < r; ++j) s = mod_reduce(s + a.at(i, j) * value(rest, j), L);
                acc[i] = mod_reduce(acc[i] + s, L);
            } else {
                acc[i] = mod_reduce(acc[i] + value(rest, i), L);
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<int> t2;
        for (int k = 0; k < i - 1; ++k) t2.push_back(tuple[k]);
        t2.push_back(g.mul(tuple[i - 1], tuple[i]));
        for (int k = i + 1; k <= n; ++k) t2.push_back(tuple[k]);
        i64 s = (i % 2 == 0) ? 1 : -1;
        for (int k = 0; k < r; ++k) acc[k] = mod_reduce(acc[k] + s * value(t2, k), L);
    }
    {
        std::vector<int> front(tuple.begin(), tuple.end() - 1);
        i64 s = ((n + 1) % 2 == 0) ? 1 : -1;
        for (int k = 0; k < r; ++k) acc[k] = mod_reduce(acc[k] + s * value(front, k), L);
    }
    // reduce against the per-coordinate moduli
    for (int k = 0; k < r; ++k) acc[k] = mod_reduce(acc[k], cx.coefficients().module.moduli[k]);
    return acc;
}

bool is_group_cocycle(const GroupCochainComplex& cx, const std::vector<i64>& f, int n) {
    const auto& g = cx.group();
    std::vector<int> tuple(n + 1, 0);
    // iterate over all (n+1)-tuples of group elements, identities included
    for (;;) {
        std::vector<i64> v = eval_differential(cx, f, n, tuple);
        for (i64 x : v)
            if (x != 0) return false;
        int i = n;
        for (; i >= 0; --i) {
            if (++tuple[i] < g.order()) break;
            tuple[i] = 0;
        }
        if (i < 0) break;
    }
    return true;
}

} // namespace bicross
