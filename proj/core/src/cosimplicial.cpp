#include "bicross/cosimplicial.hpp"

#include "bicross/errors.hpp"

#include <cassert>
#include <functional>
#include <sstream>

namespace bicross {

namespace {

std::string at(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

} // namespace

void CosimplicialObject::verify_identities() const {
    const int b = bound();
    // d^j d^i = d^i d^{j-1} for i < j
    for (int n = 0; n + 2 <= b; ++n)
        for (int i = 0; i <= n + 1; ++i)
            for (int j = i + 1; j <= n + 2; ++j) {
                Mat64 lhs = coface[n + 1][j].mul_mod(coface[n][i], m);
                Mat64 rhs = coface[n + 1][i].mul_mod(coface[n][j - 1], m);
                if (!lhs.sub_mod(rhs, m).is_zero_mod(m))
                    throw AlgebraError("ComplexIdentity", "coface identity at n=" +
                                                              std::to_string(n) + " " + at(i, j));
            }
    // s^j s^i = s^i s^{j+1} for i <= j   (maps X^{n+2} -> X^n)
    for (int n = 0; n + 2 <= b; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                Mat64 lhs = codegeneracy[n][j].mul_mod(codegeneracy[n + 1][i], m);
                Mat64 rhs = codegeneracy[n][i].mul_mod(codegeneracy[n + 1][j + 1], m);
                if (!lhs.sub_mod(rhs, m).is_zero_mod(m))
                    throw AlgebraError("ComplexIdentity", "codegeneracy identity at n=" +
                                                              std::to_string(n) + " " + at(i, j));
            }
    // mixed: s^j d^i
    for (int n = 0; n + 1 <= b; ++n)
        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j <= n; ++j) {
                Mat64 lhs = codegeneracy[n][j].mul_mod(coface[n][i], m); // X^n -> X^n
                Mat64 want;
                if (i < j)
                    want = (n >= 1) ? coface[n - 1][i].mul_mod(codegeneracy[n - 1][j - 1], m)
                                    : Mat64::identity(ranks[n]);
                else if (i == j || i == j + 1)
                    want = Mat64::identity(ranks[n]);
                else
                    want = (n >= 1) ? coface[n - 1][i - 1].mul_mod(codegeneracy[n - 1][j], m)
                                    : Mat64::identity(ranks[n]);
                if (!lhs.sub_mod(want, m).is_zero_mod(m))
                    throw AlgebraError("ComplexIdentity", "mixed identity at n=" +
                                                              std::to_string(n) + " " + at(i, j));
            }
}

Mat64 CosimplicialObject::cochain_differential(int n) const {
    assert(n + 1 <= bound());
    Mat64 d(ranks[n + 1], ranks[n]);
    for (int i = 0; i <= n + 1; ++i) {
        i64 s = (i % 2 == 0) ? 1 : -1;
        d = d.add_mod(coface[n][i].scaled_mod(s, m), m);
    }
    return d;
}

NormalizedParts normalize(const CosimplicialObject& x) {
    const int b = x.bound();
    NormalizedParts out;
    out.n_gens.resize(b + 1);
    out.d_gens.resize(b + 1);
    out.n_order.resize(b + 1, 1);
    out.d_order.resize(b + 1, 1);
    out.n_differential.resize(b + 1);
    for (int n = 0; n <= b; ++n) {
        const int r = x.ranks[n];
        if (n == 0) {
            for (int i = 0; i < r; ++i) {
                std::vector<i64> e(r, 0);
                e[i] = 1;
                out.n_gens[0].push_back(std::move(e));
            }
        } else {
            // N^n: joint kernel of the codegeneracies leaving X^n
            Mat64 stacked(0, r);
            for (int i = 0; i < n; ++i) stacked = stacked.stacked(x.codegeneracy[n - 1][i]);
            out.n_gens[n] = kernel_mod(stacked, x.m);
            // D^n: the images of the first n cofaces
            for (int j = 0; j < n; ++j) {
                const Mat64& d = x.coface[n - 1][j];
                for (int c = 0; c < d.cols; ++c) {
                    std::vector<i64> v(r);
                    for (int rr = 0; rr < r; ++rr) v[rr] = d.at(rr, c);
                    out.d_gens[n].push_back(std::move(v));
                }
            }
        }
        HowellForm hn = rowspace_howell(out.n_gens[n], r, x.m);
        HowellForm hd = rowspace_howell(out.d_gens[n], r, x.m);
        mpz_class no = 1, dorder = 1, total = 1, sum = 1;
        for (i64 f : hn.span_factors()) no *= f;
        for (i64 f : hd.span_factors()) dorder *= f;
        mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(x.m),
                      static_cast<unsigned long>(r));
        if (no * dorder != total)
            throw AlgebraError("SplittingFailed", "|N||D| != |C| at degree " + std::to_string(n));
        std::vector<std::vector<i64>> both = out.n_gens[n];
        both.insert(both.end(), out.d_gens[n].begin(), out.d_gens[n].end());
        for (i64 f : rowspace_howell(both, r, x.m).span_factors()) sum *= f;
        if (sum != total)
            throw AlgebraError("SplittingFailed", "N + D != C at degree " + std::to_string(n));
        out.n_order[n] = no;
        out.d_order[n] = dorder;
    }
    for (int n = 0; n + 1 <= b; ++n) {
        Mat64 d = x.cochain_differential(n);
        for (const auto& g : out.n_gens[n]) out.n_differential[n].push_back(d.apply_mod(g, x.m));
    }
    return out;
}

Presentation normalized_cohomology(const CosimplicialObject& x, const NormalizedParts& parts,
                                   int n) {
    assert(n + 1 <= x.bound());
    const int r = x.ranks[n];
    // cocycles of the subcomplex: in N and killed by the differential
    Mat64 stacked = x.cochain_differential(n);
    for (int i = 0; i < n; ++i) stacked = stacked.stacked(x.codegeneracy[n - 1][i]);
    std::vector<std::vector<i64>> zgens = kernel_mod(stacked, x.m);
    std::vector<std::vector<i64>> bgens =
        (n == 0) ? std::vector<std::vector<i64>>{} : parts.n_differential[n - 1];
    return subquotient_presentation(zgens, bgens, DiagModule::uniform(r, x.m));
}

Presentation cochain_cohomology(const CosimplicialObject& x, int n) {
    assert(n + 1 <= x.bound());
    Mat64 d_in = (n == 0) ? Mat64(x.ranks[0], 0) : x.cochain_differential(n - 1);
    return homology_at(d_in, x.cochain_differential(n), x.m);
}

// ------------------------------------------------------------- bicomplex

void CosimplicialBicomplex::verify_identities() const {
    for (int q = 0; q <= m_bound; ++q) row(q).verify_identities();
    for (int p = 0; p <= m_bound; ++p) column(p).verify_identities();
    // horizontal and vertical operators commute
    for (int p = 0; p + 1 <= m_bound; ++p)
        for (int q = 0; q + 1 <= m_bound; ++q) {
            for (int i = 0; i <= p + 1; ++i)
                for (int j = 0; j <= q + 1; ++j) {
                    Mat64 a = coface_h(p, q + 1, i).mul_mod(coface_v(p, q, j), m_m);
                    Mat64 b = coface_v(p + 1, q, j).mul_mod(coface_h(p, q, i), m_m);
                    if (!a.sub_mod(b, m_m).is_zero_mod(m_m))
                        throw AlgebraError("ComplexIdentity",
                                           "coface directions do not commute at " + at(p, q));
                }
            for (int i = 0; i <= p; ++i)
                for (int j = 0; j <= q; ++j) {
                    Mat64 a = codeg_h(p, q, i).mul_mod(codeg_v(p + 1, q, j), m_m);
                    Mat64 b = codeg_v(p, q, j).mul_mod(codeg_h(p, q + 1, i), m_m);
                    if (!a.sub_mod(b, m_m).is_zero_mod(m_m))
                        throw AlgebraError("ComplexIdentity",
                                           "codegeneracy directions do not commute at " + at(p, q));
                }
            for (int i = 0; i <= p + 1; ++i)
                for (int j = 0; j <= q; ++j) {
                    Mat64 a = coface_h(p, q, i).mul_mod(codeg_v(p, q, j), m_m);
                    Mat64 b = codeg_v(p + 1, q, j).mul_mod(coface_h(p, q + 1, i), m_m);
                    if (!a.sub_mod(b, m_m).is_zero_mod(m_m))
                        throw AlgebraError("ComplexIdentity", "mixed h-face/v-degeneracy at " +
                                                                  at(p, q));
                }
        }
}

CosimplicialObject CosimplicialBicomplex::diag() const {
    CosimplicialObject d;
    d.m = m_m;
    d.ranks.resize(m_bound + 1);
    for (int p = 0; p <= m_bound; ++p) d.ranks[p] = rank(p, p);
    d.coface.resize(m_bound);
    d.codegeneracy.resize(m_bound);
    for (int p = 0; p + 1 <= m_bound; ++p) {
        for (int i = 0; i <= p + 1; ++i)
            d.coface[p].push_back(coface_h(p, p + 1, i).mul_mod(coface_v(p, p, i), m_m));
        for (int j = 0; j <= p; ++j)
            d.codegeneracy[p].push_back(codeg_h(p, p, j).mul_mod(codeg_v(p + 1, p, j), m_m));
    }
    return d;
}

CosimplicialObject CosimplicialBicomplex::row(int q) const {
    CosimplicialObject r;
    r.m = m_m;
    r.ranks.resize(m_bound + 1);
    for (int p = 0; p <= m_bound; ++p) r.ranks[p] = rank(p, q);
    r.coface.resize(m_bound);
    r.codegeneracy.resize(m_bound);
    for (int p = 0; p + 1 <= m_bound; ++p) {
        for (int i = 0; i <= p + 1; ++i) r.coface[p].push_back(coface_h(p, q, i));
        for (int j = 0; j <= p; ++j) r.codegeneracy[p].push_back(codeg_h(p, q, j));
    }
    return r;
}

CosimplicialObject CosimplicialBicomplex::column(int p) const {
    CosimplicialObject c;
    c.m = m_m;
    c.ranks.resize(m_bound + 1);
    for (int q = 0; q <= m_bound; ++q) c.ranks[q] = rank(p, q);
    c.coface.resize(m_bound);
    c.codegeneracy.resize(m_bound);
    for (int q = 0; q + 1 <= m_bound; ++q) {
        for (int i = 0; i <= q + 1; ++i) c.coface[q].push_back(coface_v(p, q, i));
        for (int j = 0; j <= q; ++j) c.codegeneracy[q].push_back(codeg_v(p, q, j));
    }
    return c;
}

int CosimplicialBicomplex::TotLayout::block_index(int p, int q) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].first == p && blocks[i].second == q) return static_cast<int>(i);
    return -1;
}

CosimplicialBicomplex::TotLayout CosimplicialBicomplex::tot_layout(int n) const {
    TotLayout l;
    for (int p = 0; p <= n; ++p) {
        int q = n - p;
        if (p > m_bound || q > m_bound)
            throw AlgebraError("InsufficientBounds", "total degree " + std::to_string(n));
        l.offset.push_back(l.rank);
        l.blocks.emplace_back(p, q);
        l.rank += rank(p, q);
    }
    return l;
}

Mat64 CosimplicialBicomplex::tot_differential(int n) const {
    TotLayout src = tot_layout(n), dst = tot_layout(n + 1);
    Mat64 d(dst.rank, src.rank);
    for (size_t b = 0; b < src.blocks.size(); ++b) {
        auto [p, q] = src.blocks[b];
        {
            int tb = dst.block_index(p + 1, q);
            Mat64 dh(rank(p + 1, q), rank(p, q));
            for (int i = 0; i <= p + 1; ++i)
                dh = dh.add_mod(coface_h(p, q, i).scaled_mod((i % 2 == 0) ? 1 : -1, m_m), m_m);
            for (int r = 0; r < dh.rows; ++r)
                for (int c = 0; c < dh.cols; ++c)
                    d.at(dst.offset[tb] + r, src.offset[b] + c) = dh.at(r, c);
        }
        {
            int tb = dst.block_index(p, q + 1);
            Mat64 dv(rank(p, q + 1), rank(p, q));
            for (int j = 0; j <= q + 1; ++j)
                dv = dv.add_mod(coface_v(p, q, j).scaled_mod(((p + j) % 2 == 0) ? 1 : -1, m_m),
                                m_m);
            for (int r = 0; r < dv.rows; ++r)
                for (int c = 0; c < dv.cols; ++c)
                    d.at(dst.offset[tb] + r, src.offset[b] + c) = dv.at(r, c);
        }
    }
    return d;
}

Mat64 CosimplicialBicomplex::diag_differential(int n) const { return diag().cochain_differential(n); }

CosimplicialBicomplex bicomplex_from_matched_pair(const GroupMatchedPair& mp, i64 m, int bound,
                                                  long size_guard) {
    const int ot = mp.T().order(), on = mp.N().order();
    CosimplicialBicomplex x(m, bound);
    x.m_ranks.assign((bound + 1) * (bound + 1), 0);
    x.m_dh.resize(x.m_ranks.size());
    x.m_dv.resize(x.m_ranks.size());
    x.m_sh.resize(x.m_ranks.size());
    x.m_sv.resize(x.m_ranks.size());

    auto rank_of = [&](int p, int q) {
        long r = 1;
        for (int i = 0; i < p; ++i) r *= ot;
        for (int i = 0; i < q; ++i) r *= on;
        if (r > size_guard) throw SizeGuardError("cosimplicial block " + at(p, q));
        return static_cast<int>(r);
    };
    for (int p = 0; p <= bound; ++p)
        for (int q = 0; q <= bound; ++q) x.m_ranks[x.slot(p, q)] = rank_of(p, q);

    auto index_of = [&](const std::vector<int>& ts, const std::vector<int>& ns) {
        int idx = 0;
        for (int e : ts) idx = idx * ot + e;
        for (int e : ns) idx = idx * on + e;
        return idx;
    };
    auto tuples_at = [&](int idx, int p, int q) {
        std::vector<int> ts(p), ns(q);
        for (int i = q - 1; i >= 0; --i) {
            ns[i] = idx % on;
            idx /= on;
        }
        for (int i = p - 1; i >= 0; --i) {
            ts[i] = idx % ot;
            idx /= ot;
        }
        return std::make_pair(ts, ns);
    };

    for (int p = 0; p <= bound; ++p)
        for (int q = 0; q <= bound; ++q) {
            // horizontal cofaces X^{p,q} -> X^{p+1,q}
            if (p + 1 <= bound) {
                auto& list = x.m_dh[x.slot(p, q)];
                for (int j = 0; j <= p + 1; ++j) {
                    Mat64 d(x.rank(p + 1, q), x.rank(p, q));
                    for (int ri = 0; ri < d.rows; ++ri) {
                        auto [ts, ns] = tuples_at(ri, p + 1, q);
                        if (j == 0) {
                            std::vector<int> front(ts.begin(), ts.end() - 1);
                            d.at(ri, index_of(front, mp.act_left_tuple(ts[p], ns))) = 1;
                        } else if (j <= p) {
                            int k = p + 1 - j;
                            std::vector<int> t2;
                            for (int i = 0; i < k - 1; ++i) t2.push_back(ts[i]);
                            t2.push_back(mp.T().mul(ts[k - 1], ts[k]));
                            for (int i = k + 1; i <= p; ++i) t2.push_back(ts[i]);
                            d.at(ri, index_of(t2, ns)) = 1;
                        } else {
                            std::vector<int> back(ts.begin() + 1, ts.end());
                            d.at(ri, index_of(back, ns)) = 1;
                        }
                    }
                    list.push_back(std::move(d));
                }
            }
            // horizontal codegeneracies X^{p+1,q} -> X^{p,q}
            if (p + 1 <= bound) {
                auto& list = x.m_sh[x.slot(p, q)];
                for (int j = 0; j <= p; ++j) {
                    Mat64 s(x.rank(p, q), x.rank(p + 1, q));
                    for (int ri = 0; ri < s.rows; ++ri) {
                        auto [ts, ns] = tuples_at(ri, p, q);
                        // insert the identity after position p-j
                        std::vector<int> t2;
                        for (int i = 0; i < p - j; ++i) t2.push_back(ts[i]);
                        t2.push_back(0);
                        for (int i = p - j; i < p; ++i) t2.push_back(ts[i]);
                        s.at(ri, index_of(t2, ns)) = 1;
                    }
                    list.push_back(std::move(s));
                }
            }
            // vertical cofaces X^{p,q} -> X^{p,q+1}
            if (q + 1 <= bound) {
                auto& list = x.m_dv[x.slot(p, q)];
                for (int i = 0; i <= q + 1; ++i) {
                    Mat64 d(x.rank(p, q + 1), x.rank(p, q));
                    for (int ri = 0; ri < d.rows; ++ri) {
                        auto [ts, ns] = tuples_at(ri, p, q + 1);
                        if (i == 0) {
                            std::vector<int> rest(ns.begin() + 1, ns.end());
                            d.at(ri, index_of(mp.act_right_tuple(ts, ns[0]), rest)) = 1;
                        } else if (i <= q) {
                            std::vector<int> n2;
                            for (int k = 0; k < i - 1; ++k) n2.push_back(ns[k]);
                            n2.push_back(mp.N().mul(ns[i - 1], ns[i]));
                            for (int k = i + 1; k <= q; ++k) n2.push_back(ns[k]);
                            d.at(ri, index_of(ts, n2)) = 1;
                        } else {
                            std::vector<int> front(ns.begin(), ns.end() - 1);
                            d.at(ri, index_of(ts, front)) = 1;
                        }
                    }
                    list.push_back(std::move(d));
                }
            }
            // vertical codegeneracies X^{p,q+1} -> X^{p,q}
            if (q + 1 <= bound) {
                auto& list = x.m_sv[x.slot(p, q)];
                for (int i = 0; i <= q; ++i) {
                    Mat64 s(x.rank(p, q), x.rank(p, q + 1));
                    for (int ri = 0; ri < s.rows; ++ri) {
                        auto [ts, ns] = tuples_at(ri, p, q);
                        std::vector<int> n2;
                        for (int k = 0; k < i; ++k) n2.push_back(ns[k]);
                        n2.push_back(0);
                        for (int k = i; k < q; ++k) n2.push_back(ns[k]);
                        s.at(ri, index_of(ts, n2)) = 1;
                    }
                    list.push_back(std::move(s));
                }
            }
        }
    x.verify_identities();
    return x;
}

// ------------------------------------------------------------ AW / shuffle

CochainMap alexander_whitney(const CosimplicialBicomplex& x, int n_max) {
    const i64 m = x.modulus();
    CochainMap g;
    for (int n = 0; n <= n_max; ++n) {
        auto layout = x.tot_layout(n);
        Mat64 gm(x.rank(n, n), layout.rank);
        for (size_t b = 0; b < layout.blocks.size(); ++b) {
            auto [p, q] = layout.blocks[b];
            // (d_v^0)^p then d_h^{p+1} ... d_h^n
            Mat64 comp = Mat64::identity(x.rank(p, q));
            int cq = q;
            for (int t = 0; t < p; ++t) {
                comp = x.coface_v(p, cq, 0).mul_mod(comp, m);
                ++cq;
            }
            int cp = p;
            for (int idx = p + 1; idx <= n; ++idx) {
                comp = x.coface_h(cp, cq, idx).mul_mod(comp, m);
                ++cp;
            }
            for (int r = 0; r < comp.rows; ++r)
                for (int c = 0; c < comp.cols; ++c)
                    gm.at(r, layout.offset[b] + c) = comp.at(r, c);
        }
        g.degree.push_back(std::move(gm));
    }
    // chain-map property
    for (int n = 0; n + 1 <= n_max; ++n) {
        Mat64 lhs = g.degree[n + 1].mul_mod(x.tot_differential(n), m);
        Mat64 rhs = x.diag_differential(n).mul_mod(g.degree[n], m);
        if (!lhs.sub_mod(rhs, m).is_zero_mod(m))
            throw AlgebraError("NotChainMap", "alexander_whitney at degree " + std::to_string(n));
    }
    return g;
}

CochainMap shuffle_map(const CosimplicialBicomplex& x, int n_max) {
    const i64 m = x.modulus();
    CochainMap f;
    for (int n = 0; n <= n_max; ++n) {
        auto layout = x.tot_layout(n);
        Mat64 fm(layout.rank, x.rank(n, n));
        for (size_t b = 0; b < layout.blocks.size(); ++b) {
            auto [p, q] = layout.blocks[b];
            // sum over p-subsets S of {0..n-1}: v-indices S, h-indices rest
            std::vector<int> sel(p);
            std::vector<bool> in(n, false);
            Mat64 acc(x.rank(p, q), x.rank(n, n));
            std::function<void(int, int)> rec = [&](int start, int chosen) {
                if (chosen == p) {
                    std::vector<int> vs, hs;
                    for (int i = 0; i < n; ++i) (in[i] ? vs : hs).push_back(i);
                    // parity = inversions between the blocks (vs first)
                    int inv = 0;
                    for (int s : vs)
                        for (int t : hs)
                            if (s > t) ++inv;
                    // apply sigma_v with descending indices, then sigma_h
                    Mat64 comp = Mat64::identity(x.rank(n, n));
                    int cq = n;
                    for (int i = static_cast<int>(vs.size()) - 1; i >= 0; --i) {
                        comp = x.codeg_v(n, cq - 1, vs[i]).mul_mod(comp, m);
                        --cq;
                    }
                    int cp = n;
                    for (int i = static_cast<int>(hs.size()) - 1; i >= 0; --i) {
                        comp = x.codeg_h(cp - 1, cq, hs[i]).mul_mod(comp, m);
                        --cp;
                    }
                    acc = acc.add_mod(comp.scaled_mod((inv % 2 == 0) ? 1 : -1, m), m);
                    return;
                }
                for (int i = start; i < n; ++i) {
                    in[i] = true;
                    rec(i + 1, chosen + 1);
                    in[i] = false;
                }
            };
            rec(0, 0);
            for (int r = 0; r < acc.rows; ++r)
                for (int c = 0; c < acc.cols; ++c) fm.at(layout.offset[b] + r, c) = acc.at(r, c);
        }
        f.degree.push_back(std::move(fm));
    }
    for (int n = 0; n + 1 <= n_max; ++n) {
        Mat64 lhs = f.degree[n + 1].mul_mod(x.diag_differential(n), m);
        Mat64 rhs = x.tot_differential(n).mul_mod(f.degree[n], m);
        if (!lhs.sub_mod(rhs, m).is_zero_mod(m))
            throw AlgebraError("NotChainMap", "shuffle at degree " + std::to_string(n));
    }
    return f;
}

EZReport verify_ez(const CosimplicialBicomplex& x, int n_max) {
    const i64 m = x.modulus();
    EZReport rep;
    CochainMap g = alexander_whitney(x, n_max + 1);
    CochainMap f = shuffle_map(x, n_max + 1);
    CosimplicialObject dg = x.diag();
    rep.all_iso = true;
    for (int n = 0; n <= n_max; ++n) {
        Mat64 tot_in = (n == 0) ? Mat64(x.tot_layout(0).rank, 0) : x.tot_differential(n - 1);
        Presentation ht = homology_at(tot_in, x.tot_differential(n), m);
        Mat64 diag_in = (n == 0) ? Mat64(x.rank(0, 0), 0) : dg.cochain_differential(n - 1);
        Presentation hd = homology_at(diag_in, dg.cochain_differential(n), m);
        rep.tot_factors.push_back(ht.factors_string());
        rep.diag_factors.push_back(hd.factors_string());
        // induced maps on classes
        Mat64 gm(hd.num_generators(), ht.num_generators());
        for (int c = 0; c < ht.num_generators(); ++c) {
            auto coords = hd.reduce64(g.degree[n].apply_mod(ht.generators()[c], m));
            for (int r = 0; r < gm.rows; ++r) gm.at(r, c) = coords[r];
        }
        Mat64 fmm(ht.num_generators(), hd.num_generators());
        for (int c = 0; c < hd.num_generators(); ++c) {
            auto coords = ht.reduce64(f.degree[n].apply_mod(hd.generators()[c], m));
            for (int r = 0; r < fmm.rows; ++r) fmm.at(r, c) = coords[r];
        }
        bool iso = true;
        Mat64 fg = fmm.mul_mod(gm, m);
        for (int i = 0; i < fg.rows; ++i)
            for (int j = 0; j < fg.cols; ++j)
                if (mod_reduce(fg.at(i, j) - (i == j ? 1 : 0), ht.factors64()[i]) != 0) iso = false;
        Mat64 gf = gm.mul_mod(fmm, m);
        for (int i = 0; i < gf.rows; ++i)
            for (int j = 0; j < gf.cols; ++j)
                if (mod_reduce(gf.at(i, j) - (i == j ? 1 : 0), hd.factors64()[i]) != 0) iso = false;
        rep.iso.push_back(iso);
        rep.all_iso = rep.all_iso && iso;
    }
    return rep;
}

} // namespace bicross
