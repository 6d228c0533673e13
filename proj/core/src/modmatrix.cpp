#include "bicross/modmatrix.hpp"

#include "bicross/errors.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace bicross {

i64 xgcd64(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    i64 x1, y1;
    i64 g = xgcd64(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

i64 gcd64(i64 a, i64 b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm64(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd64(a, b) * b;
}

i64 unit_to_gcd(i64 a, i64 m) {
    assert(m > 0);
    a = mod_reduce(a, m);
    assert(a != 0);
    i64 g = gcd64(a, m);
    // a/g is a unit mod m/g; lift it to a unit mod m by adding multiples of
    // m/g.  The search only has to fix primes dividing g, so it is short.
    i64 mg = m / g;
    i64 x, y;
    xgcd64(a / g, mg, x, y);
    i64 u = mg == 1 ? 1 : mod_reduce(x, mg);
    if (u == 0) u = mg; // keep candidates nonzero
    for (i64 t = 0; t < m; ++t) {
        i64 cand = mod_reduce(u + t * mg, m);
        if (cand != 0 && gcd64(cand, m) == 1) {
            assert(mod_reduce(cand * a, m) == g % m);
            return cand;
        }
    }
    assert(false && "unit_to_gcd: no unit found");
    return 1;
}

Mat64 Mat64::identity(int n) {
    Mat64 m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat64 Mat64::transposed() const {
    Mat64 out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat64 Mat64::mul_mod(const Mat64& rhs, i64 m) const {
    assert(cols == rhs.rows);
    Mat64 out(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            i64 a = mod_reduce(at(i, k), m);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols; ++j) {
                i64 b = mod_reduce(rhs.at(k, j), m);
                if (b == 0) continue;
                out.at(i, j) = mod_reduce(out.at(i, j) + a * b, m);
            }
        }
    return out;
}

std::vector<i64> Mat64::apply_mod(const std::vector<i64>& x, i64 m) const {
    assert(static_cast<int>(x.size()) == cols);
    std::vector<i64> out(rows, 0);
    for (int j = 0; j < cols; ++j) {
        i64 v = mod_reduce(x[j], m);
        if (v == 0) continue;
        for (int i = 0; i < rows; ++i) out[i] = mod_reduce(out[i] + at(i, j) * v, m);
    }
    return out;
}

bool Mat64::is_zero_mod(i64 m) const {
    for (i64 v : e)
        if (mod_reduce(v, m) != 0) return false;
    return true;
}

Mat64 Mat64::sub_mod(const Mat64& rhs, i64 m) const {
    assert(rows == rhs.rows && cols == rhs.cols);
    Mat64 out(rows, cols);
    for (size_t i = 0; i < e.size(); ++i) out.e[i] = mod_reduce(e[i] - rhs.e[i], m);
    return out;
}

Mat64 Mat64::add_mod(const Mat64& rhs, i64 m) const {
    assert(rows == rhs.rows && cols == rhs.cols);
    Mat64 out(rows, cols);
    for (size_t i = 0; i < e.size(); ++i) out.e[i] = mod_reduce(e[i] + rhs.e[i], m);
    return out;
}

Mat64 Mat64::scaled_mod(i64 c, i64 m) const {
    Mat64 out(rows, cols);
    c = mod_reduce(c, m);
    for (size_t i = 0; i < e.size(); ++i) out.e[i] = mod_reduce(e[i] * c, m);
    return out;
}

Mat64 Mat64::stacked(const Mat64& below) const {
    assert(cols == below.cols);
    Mat64 out(rows + below.rows, cols);
    std::copy(e.begin(), e.end(), out.e.begin());
    std::copy(below.e.begin(), below.e.end(), out.e.begin() + e.size());
    return out;
}

Mat64 Mat64::beside(const Mat64& right) const {
    assert(rows == right.rows);
    Mat64 out(rows, cols + right.cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) out.at(i, j) = at(i, j);
        for (int j = 0; j < right.cols; ++j) out.at(i, cols + j) = right.at(i, j);
    }
    return out;
}

// ------------------------------------------------------------- HowellForm

HowellForm::HowellForm(int width, int tail, i64 m)
    : m_width(width), m_tail(tail), m_m(m), m_pivot_of_col(width + tail, -1) {
    if (m < 2 || m > (1ll << 31))
        throw AlgebraError("BadModulus", "modulus must be in [2, 2^31], got " + std::to_string(m));
}

int HowellForm::leading(const std::vector<i64>& v) const {
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) return static_cast<int>(j);
    return -1;
}

// Echelon insertion; marks columns whose pivot row was created or replaced.
int HowellForm::insert(std::vector<i64> row) {
    const int w = m_width + m_tail;
    std::deque<std::vector<i64>> work;
    work.push_back(std::move(row));
    int first_new = -1;
    auto touch = [&](int j) {
        if (first_new < 0 || j < first_new) first_new = j;
        if (!m_dirty_flag[j]) {
            m_dirty_flag[j] = true;
            m_dirty.push_back(j);
        }
    };
    auto leading_from = [&](const std::vector<i64>& v, int start) {
        for (int j = start; j < w; ++j)
            if (v[j] != 0) return j;
        return -1;
    };
    while (!work.empty()) {
        std::vector<i64> v = std::move(work.front());
        work.pop_front();
        for (i64& x : v) x = mod_reduce(x, m_m);
        int j = leading_from(v, 0);
        while (j >= 0) {
            int p = m_pivot_of_col[j];
            if (p < 0) {
                i64 u = unit_to_gcd(v[j], m_m);
                if (u != 1)
                    for (i64& x : v) x = mod_reduce(x * u, m_m);
                m_pivot_of_col[j] = static_cast<int>(m_rows.size());
                m_rows.push_back(std::move(v));
                touch(j);
                break;
            }
            std::vector<i64>& pr = m_rows[p];
            i64 a = pr[j], b = v[j];
            if (b % a == 0) {
                i64 c = b / a;
                for (int k = j; k < w; ++k) v[k] = mod_reduce(v[k] - c * pr[k], m_m);
            } else {
                i64 s, t;
                i64 g = xgcd64(a, b, s, t);
                s = mod_reduce(s, m_m);
                t = mod_reduce(t, m_m);
                std::vector<i64> np(w, 0);
                for (int k = j; k < w; ++k) np[k] = mod_reduce(s * pr[k] + t * v[k], m_m);
                i64 ca = a / g, cb = b / g;
                std::vector<i64> oldp(w, 0);
                for (int k = j; k < w; ++k) {
                    oldp[k] = mod_reduce(pr[k] - ca * np[k], m_m);
                    v[k] = mod_reduce(v[k] - cb * np[k], m_m);
                }
                i64 u = unit_to_gcd(np[j], m_m);
                if (u != 1)
                    for (i64& x : np) x = mod_reduce(x * u, m_m);
                pr = std::move(np);
                touch(j);
                work.push_back(std::move(oldp));
            }
            j = leading_from(v, j + 1);
        }
    }
    return first_new;
}

void HowellForm::add_row(std::vector<i64> row) {
    assert(static_cast<int>(row.size()) == m_width + m_tail);
    if (m_dirty_flag.empty()) m_dirty_flag.assign(m_width + m_tail, false);
    m_final = false;
    insert(std::move(row));
}

void HowellForm::finalize() {
    if (m_final) return;
    if (m_dirty_flag.empty()) m_dirty_flag.assign(m_width + m_tail, false);
    const int w = m_width + m_tail;
    // Saturation: for each (new or replaced) pivot with leading g, insert
    // the annihilator multiple (m/g)*row; its span content is what makes
    // the Howell property hold over Z/m with zero divisors.
    while (!m_dirty.empty()) {
        int j = m_dirty.front();
        m_dirty.pop_front();
        m_dirty_flag[j] = false;
        int p = m_pivot_of_col[j];
        if (p < 0) continue;
        i64 g = gcd64(m_rows[p][j], m_m);
        i64 q = m_m / g;
        if (q == 1) continue;
        std::vector<i64> ann(w, 0);
        for (int k = j + 1; k < w; ++k) ann[k] = mod_reduce(q * m_rows[p][k], m_m);
        if (leading(ann) >= 0) insert(std::move(ann));
    }
    // Drop zero rows, sort by leading column, reduce above pivots.
    std::vector<std::vector<i64>> keep;
    for (auto& r : m_rows)
        if (leading(r) >= 0) keep.push_back(std::move(r));
    std::sort(keep.begin(), keep.end(),
              [this](const auto& a, const auto& b) { return leading(a) < leading(b); });
    m_rows = std::move(keep);
    std::fill(m_pivot_of_col.begin(), m_pivot_of_col.end(), -1);
    for (size_t i = 0; i < m_rows.size(); ++i)
        m_pivot_of_col[leading(m_rows[i])] = static_cast<int>(i);
    // Reduce entries above each pivot into [0, leading).
    for (int i = static_cast<int>(m_rows.size()) - 1; i >= 0; --i) {
        int j = leading(m_rows[i]);
        i64 g = m_rows[i][j];
        for (int r = 0; r < i; ++r) {
            i64 c = m_rows[r][j] / g;
            if (c == 0) continue;
            for (int k = j; k < w; ++k)
                m_rows[r][k] = mod_reduce(m_rows[r][k] - c * m_rows[i][k], m_m);
        }
    }
    m_final = true;
}

std::vector<i64> HowellForm::reduce(std::vector<i64> v) const {
    assert(m_final);
    const int w = m_width + m_tail;
    assert(static_cast<int>(v.size()) == w);
    for (i64& x : v) x = mod_reduce(x, m_m);
    for (int j = 0; j < w; ++j) {
        if (v[j] == 0) continue;
        int p = m_pivot_of_col[j];
        if (p < 0) continue;
        i64 c = v[j] / m_rows[p][j];
        if (c == 0) continue;
        for (int k = j; k < w; ++k) v[k] = mod_reduce(v[k] - c * m_rows[p][k], m_m);
    }
    return v;
}

bool HowellForm::spans(const std::vector<i64>& v) const {
    std::vector<i64> r = reduce(v);
    for (int j = 0; j < m_width; ++j)
        if (r[j] != 0) return false;
    return true;
}

unsigned long long HowellForm::span_size() const {
    assert(m_final && m_tail == 0);
    unsigned long long n = 1;
    for (const auto& r : m_rows) {
        int j = leading(r);
        n *= static_cast<unsigned long long>(m_m / gcd64(r[j], m_m));
    }
    return n;
}

std::vector<i64> HowellForm::span_factors() const {
    assert(m_final && m_tail == 0);
    std::vector<i64> out;
    for (const auto& r : m_rows) out.push_back(m_m / gcd64(r[leading(r)], m_m));
    std::sort(out.begin(), out.end());
    return out;
}

bool HowellForm::operator==(const HowellForm& rhs) const {
    assert(m_final && rhs.m_final);
    return m_width == rhs.m_width && m_tail == rhs.m_tail && m_m == rhs.m_m && m_rows == rhs.m_rows;
}

// -------------------------------------------------------------- ModSolver

ModSolver::ModSolver(const Mat64& a, i64 m)
    : m_nrows(a.rows), m_ncols(a.cols), m_m(m), m_form(a.rows, a.cols, m) {
    // rows of [A^T | I]: the span consists of the pairs (x*A^T | x)
    for (int i = 0; i < a.cols; ++i) {
        std::vector<i64> row(static_cast<size_t>(a.rows) + a.cols, 0);
        for (int r = 0; r < a.rows; ++r) row[r] = mod_reduce(a.at(r, i), m);
        row[static_cast<size_t>(a.rows) + i] = 1;
        m_form.add_row(std::move(row));
    }
    m_form.finalize();
}

std::vector<std::vector<i64>> ModSolver::kernel() const {
    std::vector<std::vector<i64>> out;
    for (const auto& r : m_form.rows()) {
        bool zero_head = true;
        for (int j = 0; j < m_nrows; ++j)
            if (r[j] != 0) { zero_head = false; break; }
        if (!zero_head) continue;
        out.emplace_back(r.begin() + m_nrows, r.end());
    }
    return out;
}

std::optional<std::vector<i64>> ModSolver::solve(const std::vector<i64>& b) const {
    assert(static_cast<int>(b.size()) == m_nrows);
    std::vector<i64> v(static_cast<size_t>(m_nrows) + m_ncols, 0);
    for (int i = 0; i < m_nrows; ++i) v[i] = mod_reduce(b[i], m_m);
    v = m_form.reduce(std::move(v));
    for (int i = 0; i < m_nrows; ++i)
        if (v[i] != 0) return std::nullopt;
    std::vector<i64> x(m_ncols);
    for (int i = 0; i < m_ncols; ++i) x[i] = mod_reduce(-v[static_cast<size_t>(m_nrows) + i], m_m);
    return x;
}

bool ModSolver::image_contains(const std::vector<i64>& b) const { return solve(b).has_value(); }

// -------------------------------------------------------- diagonalize_mod

DiagonalFormMod diagonalize_mod(const Mat64& a, i64 M) {
    if (M < 2 || M > (1ll << 31))
        throw AlgebraError("BadModulus", "modulus must be in [2, 2^31]");
    const int R = a.rows, C = a.cols;
    DiagonalFormMod out;
    out.modulus = M;
    out.U = Mat64::identity(R);
    out.Uinv = Mat64::identity(R);
    Mat64 D(R, C);
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) D.at(i, j) = mod_reduce(a.at(i, j), M);

    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < C; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (int c = 0; c < R; ++c) std::swap(out.U.at(i, c), out.U.at(j, c));
        for (int r = 0; r < R; ++r) std::swap(out.Uinv.at(r, i), out.Uinv.at(r, j));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < R; ++r) std::swap(D.at(r, i), D.at(r, j));
    };
    auto row_add = [&](int i, int j, i64 f) { // row i += f * row j
        f = mod_reduce(f, M);
        if (f == 0) return;
        for (int c = 0; c < C; ++c) D.at(i, c) = mod_reduce(D.at(i, c) + f * D.at(j, c), M);
        for (int c = 0; c < R; ++c)
            out.U.at(i, c) = mod_reduce(out.U.at(i, c) + f * out.U.at(j, c), M);
        for (int r = 0; r < R; ++r)
            out.Uinv.at(r, j) = mod_reduce(out.Uinv.at(r, j) - f * out.Uinv.at(r, i), M);
    };
    auto col_add = [&](int i, int j, i64 f) { // col i += f * col j  (D only)
        f = mod_reduce(f, M);
        if (f == 0) return;
        for (int r = 0; r < R; ++r) D.at(r, i) = mod_reduce(D.at(r, i) + f * D.at(r, j), M);
    };
    // unimodular 2x2 on rows (k, i): (row_k, row_i) <- (s*row_k + t*row_i,
    //                                  -(b/g)*row_k + (a/g)*row_i)
    auto row_combine = [&](int k, int i, i64 a_, i64 b_, i64 s, i64 t, i64 g) {
        i64 ag = mod_reduce(a_ / g, M), bg = mod_reduce(b_ / g, M);
        s = mod_reduce(s, M);
        t = mod_reduce(t, M);
        auto comb = [&](Mat64& m2, int cols) {
            for (int c = 0; c < cols; ++c) {
                i64 x = m2.at(k, c), y = m2.at(i, c);
                m2.at(k, c) = mod_reduce(s * x + t * y, M);
                m2.at(i, c) = mod_reduce(-bg * x + ag * y, M);
            }
        };
        comb(D, C);
        comb(out.U, R);
        // inverse of [[s, t], [-b/g, a/g]] is [[a/g, -t], [b/g, s]]
        for (int r = 0; r < R; ++r) {
            i64 x = out.Uinv.at(r, k), y = out.Uinv.at(r, i);
            out.Uinv.at(r, k) = mod_reduce(x * ag + y * bg, M);
            out.Uinv.at(r, i) = mod_reduce(-x * t + y * s, M);
        }
    };
    auto col_combine = [&](int k, int j, i64 a_, i64 b_, i64 s, i64 t, i64 g) {
        i64 ag = mod_reduce(a_ / g, M), bg = mod_reduce(b_ / g, M);
        s = mod_reduce(s, M);
        t = mod_reduce(t, M);
        for (int r = 0; r < R; ++r) {
            i64 x = D.at(r, k), y = D.at(r, j);
            D.at(r, k) = mod_reduce(s * x + t * y, M);
            D.at(r, j) = mod_reduce(-bg * x + ag * y, M);
        }
    };
    auto row_scale_unit = [&](int i, i64 u) {
        i64 v;
        {
            i64 x, y;
            xgcd64(u, M, x, y);
            v = mod_reduce(x, M); // u^{-1} mod M
        }
        for (int c = 0; c < C; ++c) D.at(i, c) = mod_reduce(D.at(i, c) * u, M);
        for (int c = 0; c < R; ++c) out.U.at(i, c) = mod_reduce(out.U.at(i, c) * u, M);
        for (int r = 0; r < R; ++r) out.Uinv.at(r, i) = mod_reduce(out.Uinv.at(r, i) * v, M);
    };

    const int n = std::min(R, C);
    for (int k = 0; k < n; ++k) {
        for (;;) {
            // pivot: first entry of minimal gcd with M in the submatrix
            int pr = -1, pc = -1;
            i64 best = 0;
            for (int i = k; i < R; ++i)
                for (int j = k; j < C; ++j) {
                    if (D.at(i, j) == 0) continue;
                    i64 g = gcd64(D.at(i, j), M);
                    if (pr < 0 || g < best) {
                        best = g;
                        pr = i;
                        pc = j;
                        if (best == 1) goto have_pivot;
                    }
                }
        have_pivot:
            if (pr < 0) goto done; // submatrix is zero
            row_swap(k, pr);
            col_swap(k, pc);
            row_scale_unit(k, unit_to_gcd(D.at(k, k), M));
            bool again = false;
            for (int i = k + 1; i < R; ++i) {
                i64 b = D.at(i, k);
                if (b == 0) continue;
                i64 g0 = D.at(k, k);
                if (b % g0 == 0) {
                    row_add(i, k, -(b / g0));
                } else {
                    i64 s, t;
                    i64 g = xgcd64(g0, b, s, t);
                    row_combine(k, i, g0, b, s, t, g);
                    row_scale_unit(k, unit_to_gcd(D.at(k, k), M));
                    again = true;
                }
            }
            if (again) continue;
            for (int j = k + 1; j < C; ++j) {
                i64 b = D.at(k, j);
                if (b == 0) continue;
                i64 g0 = D.at(k, k);
                if (b % g0 == 0) {
                    col_add(j, k, -(b / g0));
                } else {
                    i64 s, t;
                    i64 g = xgcd64(g0, b, s, t);
                    col_combine(k, j, g0, b, s, t, g);
                    row_scale_unit(k, unit_to_gcd(D.at(k, k), M));
                    again = true;
                }
            }
            // column ops may have refilled the pivot column
            if (!again) {
                for (int i = k + 1; i < R; ++i)
                    if (D.at(i, k) != 0) { again = true; break; }
            }
            if (!again) {
                // divisibility repair: fold in a row holding a bad entry
                i64 g0 = D.at(k, k);
                bool redo = false;
                for (int i = k + 1; i < R && !redo; ++i)
                    for (int j = k + 1; j < C; ++j)
                        if (D.at(i, j) % g0 != 0) {
                            row_add(k, i, 1);
                            redo = true;
                            break;
                        }
                if (!redo) break;
            }
        }
    }
done:
    out.d.resize(R);
    for (int i = 0; i < R; ++i) {
        i64 v = (i < n) ? D.at(i, i) : 0;
        out.d[i] = (v == 0) ? M : gcd64(v, M);
    }
    return out;
}

// ------------------------------------------------------------- free funcs

HowellForm rowspace_howell(const std::vector<std::vector<i64>>& rows, int width, i64 m) {
    HowellForm h(width, 0, m);
    for (const auto& r : rows) h.add_row(r);
    h.finalize();
    return h;
}

std::vector<std::vector<i64>> kernel_mod(const Mat64& a, i64 m) {
    // The kernel only depends on the row space; pre-reduce tall systems.
    if (a.rows > 2 * a.cols + 8) {
        HowellForm h(a.cols, 0, m);
        std::vector<i64> row(a.cols);
        for (int i = 0; i < a.rows; ++i) {
            for (int j = 0; j < a.cols; ++j) row[j] = a.at(i, j);
            h.add_row(row);
        }
        h.finalize();
        Mat64 reduced(static_cast<int>(h.rows().size()), a.cols);
        for (size_t i = 0; i < h.rows().size(); ++i)
            for (int j = 0; j < a.cols; ++j) reduced.at(static_cast<int>(i), j) = h.rows()[i][j];
        return ModSolver(reduced, m).kernel();
    }
    return ModSolver(a, m).kernel();
}

} // namespace bicross
