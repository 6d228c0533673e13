#include "bicross/fingroup.hpp"

#include "bicross/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace bicross {

namespace {
std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}
} // namespace

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::map<int, int> FiniteGroup::order_statistics() const {
    std::map<int, int> st;
    for (int a = 0; a < m_order; ++a) ++st[element_order(a)];
    return st;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < m_order; ++a)
        for (int b = a + 1; b < m_order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<int>>& table, std::string name) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw AlgebraError("NoIdentity", "empty table");
    if (n > 256)
        throw SizeGuardError("group of order " + std::to_string(n) +
                             " is past the exhaustive-validation scale");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw AlgebraError("BadTable", "row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n)
                throw AlgebraError("BadTable", "entry out of range at " + triple(i, j, table[i][j]));
    }
    // element 0 must be the two-sided identity
    for (int a = 0; a < n; ++a)
        if (table[0][a] != a || table[a][0] != a)
            throw AlgebraError("NoIdentity", "element 0 is not a two-sided identity (witness " +
                                                 std::to_string(a) + ")");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw AlgebraError("NotAssociative", triple(a, b, c));
    FiniteGroup g;
    g.m_order = n;
    g.m_mul.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.m_mul[static_cast<size_t>(a) * n + b] = table[a][b];
    g.m_inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == 0 && table[b][a] == 0) {
                g.m_inv[a] = b;
                break;
            }
        if (g.m_inv[a] < 0) throw AlgebraError("NoInverse", std::to_string(a));
    }
    g.m_name = std::move(name);
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return validate(t, "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // lexicographic order puts the identity first
    const int o = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(o, std::vector<int>(o));
    for (int a = 0; a < o; ++a)
        for (int b = 0; b < o; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]]; // (ab)(i) = a(b(i))
            t[a][b] = index_of(c);
        }
    return validate(t, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    // elements r^k for k < n, then s r^k;  s r s^{-1} = r^{-1}
    const int o = 2 * n;
    auto idx = [&](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
    std::vector<std::vector<int>> t(o, std::vector<int>(o));
    for (int f1 = 0; f1 < 2; ++f1)
        for (int r1 = 0; r1 < n; ++r1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int r2 = 0; r2 < n; ++r2) {
                    // (s^f1 r^r1)(s^f2 r^r2) = s^{f1+f2} r^{(f2 ? -r1 : r1) + r2}
                    int f = (f1 + f2) % 2;
                    int r = (f2 ? -r1 : r1) + r2;
                    t[idx(f1, r1)][idx(f2, r2)] = idx(f, r);
                }
    return validate(t, "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int o = a.order() * b.order();
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    std::vector<std::vector<int>> t(o, std::vector<int>(o));
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    return validate(t, a.name() + "x" + b.name());
}

FiniteGroup FiniteGroup::trivial() { return validate({{0}}, "1"); }

// ---------------------------------------------------------- matched pairs

bool GroupMatchedPair::left_action_trivial() const {
    for (int t = 0; t < m_t.order(); ++t)
        for (int n = 0; n < m_n.order(); ++n)
            if (act_left(t, n) != n) return false;
    return true;
}

bool GroupMatchedPair::right_action_trivial() const {
    for (int t = 0; t < m_t.order(); ++t)
        for (int n = 0; n < m_n.order(); ++n)
            if (act_right(t, n) != t) return false;
    return true;
}

std::vector<int> GroupMatchedPair::act_left_tuple(int t, const std::vector<int>& ns) const {
    std::vector<int> out(ns.size());
    int cur = t;
    for (size_t i = 0; i < ns.size(); ++i) {
        out[i] = act_left(cur, ns[i]);
        cur = act_right(cur, ns[i]);
    }
    return out;
}

std::vector<int> GroupMatchedPair::act_right_tuple(const std::vector<int>& ts, int n) const {
    std::vector<int> out(ts.size());
    int cur = n;
    for (size_t i = ts.size(); i-- > 0;) {
        out[i] = act_right(ts[i], cur);
        cur = act_left(ts[i], cur);
    }
    return out;
}

GroupMatchedPair GroupMatchedPair::validate(FiniteGroup t, FiniteGroup n,
                                            const std::vector<std::vector<int>>& act_left,
                                            const std::vector<std::vector<int>>& act_right) {
    const int ot = t.order(), on = n.order();
    auto shape_check = [&](const std::vector<std::vector<int>>& a, int hi, const char* what) {
        if (static_cast<int>(a.size()) != ot)
            throw AlgebraError("BadTable", std::string(what) + ": wrong number of rows");
        for (const auto& row : a) {
            if (static_cast<int>(row.size()) != on)
                throw AlgebraError("BadTable", std::string(what) + ": wrong row length");
            for (int v : row)
                if (v < 0 || v >= hi) throw AlgebraError("BadTable", std::string(what) + ": value out of range");
        }
    };
    shape_check(act_left, on, "act_left");
    shape_check(act_right, ot, "act_right");

    GroupMatchedPair mp;
    mp.m_t = std::move(t);
    mp.m_n = std::move(n);
    mp.m_left.resize(static_cast<size_t>(ot) * on);
    mp.m_right.resize(static_cast<size_t>(ot) * on);
    for (int a = 0; a < ot; ++a)
        for (int b = 0; b < on; ++b) {
            mp.m_left[static_cast<size_t>(a) * on + b] = act_left[a][b];
            mp.m_right[static_cast<size_t>(a) * on + b] = act_right[a][b];
        }
    const FiniteGroup& T = mp.m_t;
    const FiniteGroup& N = mp.m_n;

    auto fail = [](const std::string& axiom, const std::string& witness) {
        throw AlgebraError("AxiomViolation", axiom + " at " + witness);
    };

    // left action laws: 1|>n = n, (ts)|>n = t|>(s|>n)
    for (int b = 0; b < on; ++b)
        if (mp.act_left(0, b) != b) fail("1|>n = n", std::to_string(b));
    for (int a = 0; a < ot; ++a)
        for (int s = 0; s < ot; ++s)
            for (int b = 0; b < on; ++b)
                if (mp.act_left(T.mul(a, s), b) != mp.act_left(a, mp.act_left(s, b)))
                    fail("(ts)|>n = t|>(s|>n)", triple(a, s, b));
    // right action laws: t<|1 = t, t<|(nm) = (t<|n)<|m
    for (int a = 0; a < ot; ++a)
        if (mp.act_right(a, 0) != a) fail("t<|1 = t", std::to_string(a));
    for (int a = 0; a < ot; ++a)
        for (int b = 0; b < on; ++b)
            for (int c = 0; c < on; ++c)
                if (mp.act_right(a, N.mul(b, c)) != mp.act_right(mp.act_right(a, b), c))
                    fail("t<|(nm) = (t<|n)<|m", triple(a, b, c));
    // t|>1 = 1 and t|>(nm) = (t|>n)((t<|n)|>m)
    for (int a = 0; a < ot; ++a)
        if (mp.act_left(a, 0) != 0) fail("t|>1 = 1", std::to_string(a));
    for (int a = 0; a < ot; ++a)
        for (int b = 0; b < on; ++b)
            for (int c = 0; c < on; ++c)
                if (mp.act_left(a, N.mul(b, c)) !=
                    N.mul(mp.act_left(a, b), mp.act_left(mp.act_right(a, b), c)))
                    fail("t|>(nm) = (t|>n)((t<|n)|>m)", triple(a, b, c));
    // 1<|n = 1 and (ts)<|n = (t<|(s|>n))(s<|n)
    for (int b = 0; b < on; ++b)
        if (mp.act_right(0, b) != 0) fail("1<|n = 1", std::to_string(b));
    for (int a = 0; a < ot; ++a)
        for (int s = 0; s < ot; ++s)
            for (int b = 0; b < on; ++b)
                if (mp.act_right(T.mul(a, s), b) !=
                    T.mul(mp.act_right(a, mp.act_left(s, b)), mp.act_right(s, b)))
                    fail("(ts)<|n = (t<|(s|>n))(s<|n)", triple(a, s, b));
    return mp;
}

GroupMatchedPair GroupMatchedPair::trivial_pair(FiniteGroup t, FiniteGroup n) {
    std::vector<std::vector<int>> al(t.order(), std::vector<int>(n.order()));
    std::vector<std::vector<int>> ar(t.order(), std::vector<int>(n.order()));
    for (int a = 0; a < t.order(); ++a)
        for (int b = 0; b < n.order(); ++b) {
            al[a][b] = b;
            ar[a][b] = a;
        }
    return validate(std::move(t), std::move(n), al, ar);
}

BismashGroup::BismashGroup(const GroupMatchedPair& mp) : m_mp(mp) {
    const int on = mp.N().order(), ot = mp.T().order();
    const int o = on * ot;
    std::vector<std::vector<int>> t(o, std::vector<int>(o));
    for (int n1 = 0; n1 < on; ++n1)
        for (int t1 = 0; t1 < ot; ++t1)
            for (int n2 = 0; n2 < on; ++n2)
                for (int t2 = 0; t2 < ot; ++t2) {
                    int n = mp.N().mul(n1, mp.act_left(t1, n2));
                    int tt = mp.T().mul(mp.act_right(t1, n2), t2);
                    t[index_of(n1, t1)][index_of(n2, t2)] = index_of(n, tt);
                }
    m_g = FiniteGroup::validate(t, mp.N().name() + "><" + mp.T().name());
}

GroupMatchedPair from_exact_factorization(const FiniteGroup& f, const std::vector<int>& n_elems,
                                          const std::vector<int>& t_elems) {
    auto check_subgroup = [&](const std::vector<int>& elems, const char* what) {
        std::set<int> s(elems.begin(), elems.end());
        if (s.size() != elems.size() || !s.count(0))
            throw AlgebraError("NotSubgroup", std::string(what) + ": missing identity or duplicates");
        for (int a : elems)
            for (int b : elems)
                if (!s.count(f.mul(a, b)))
                    throw AlgebraError("NotSubgroup",
                                       std::string(what) + ": not closed at (" + std::to_string(a) +
                                           "," + std::to_string(b) + ")");
    };
    check_subgroup(n_elems, "N");
    check_subgroup(t_elems, "T");
    const int on = static_cast<int>(n_elems.size());
    const int ot = static_cast<int>(t_elems.size());
    if (on * ot != f.order())
        throw AlgebraError("NotExactFactorization", "|N|*|T| = " + std::to_string(on * ot) +
                                                        " != |F| = " + std::to_string(f.order()));
    {
        std::set<int> sn(n_elems.begin(), n_elems.end());
        for (int t : t_elems)
            if (t != 0 && sn.count(t))
                throw AlgebraError("NotExactFactorization", "N and T intersect at " + std::to_string(t));
    }

    // subgroup multiplication tables in list coordinates
    auto subgroup_of = [&](const std::vector<int>& elems, const std::string& nm) {
        std::vector<int> pos(f.order(), -1);
        for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
        for (size_t a = 0; a < elems.size(); ++a)
            for (size_t b = 0; b < elems.size(); ++b) t[a][b] = pos[f.mul(elems[a], elems[b])];
        return FiniteGroup::validate(t, nm);
    };
    FiniteGroup N = subgroup_of(n_elems, f.name() + ".N");
    FiniteGroup T = subgroup_of(t_elems, f.name() + ".T");

    // factor table: f.mul(n,t) -> (n,t); uniqueness is exactly the
    // factorization property
    std::vector<std::pair<int, int>> factor(f.order(), {-1, -1});
    for (int a = 0; a < on; ++a)
        for (int b = 0; b < ot; ++b) {
            int x = f.mul(n_elems[a], t_elems[b]);
            if (factor[x].first >= 0)
                throw AlgebraError("NotExactFactorization", "N*T decomposition not unique at " +
                                                                std::to_string(x));
            factor[x] = {a, b};
        }

    std::vector<std::vector<int>> al(ot, std::vector<int>(on));
    std::vector<std::vector<int>> ar(ot, std::vector<int>(on));
    for (int b = 0; b < ot; ++b)
        for (int a = 0; a < on; ++a) {
            int x = f.mul(t_elems[b], n_elems[a]); // t*n = (t|>n)(t<|n)
            al[b][a] = factor[x].first;
            ar[b][a] = factor[x].second;
        }
    return GroupMatchedPair::validate(std::move(T), std::move(N), al, ar);
}

bool bismash_matches_group(const BismashGroup& b, const FiniteGroup& f,
                           const std::vector<int>& n_elems, const std::vector<int>& t_elems) {
    const auto& g = b.group();
    if (g.order() != f.order()) return false;
    // phi(n,t) = n*t in F; must be a bijective homomorphism
    std::vector<int> phi(g.order());
    std::vector<bool> seen(f.order(), false);
    for (int h = 0; h < g.order(); ++h) {
        phi[h] = f.mul(n_elems[b.n_part(h)], t_elems[b.t_part(h)]);
        if (seen[phi[h]]) return false;
        seen[phi[h]] = true;
    }
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            if (phi[g.mul(x, y)] != f.mul(phi[x], phi[y])) return false;
    return true;
}

} // namespace bicross
