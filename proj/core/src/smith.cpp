#include "bicross/smith.hpp"

#include "bicross/errors.hpp"

#include <cassert>

namespace bicross {

std::vector<mpz_class> SmithForm::invariant_factors() const {
    std::vector<mpz_class> out;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i)
        if (D.at(i, i) > 1) out.push_back(D.at(i, i));
    return out;
}

namespace {

// Locate the smallest-absolute-value nonzero entry of D(k:, k:), first
// occurrence row-major.  Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, int k, int& pr, int& pc) {
    bool found = false;
    mpz_class best;
    for (int i = k; i < d.rows(); ++i) {
        for (int j = k; j < d.cols(); ++j) {
            const mpz_class& x = d.at(i, j);
            if (x == 0) continue;
            mpz_class a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm s;
    const int R = m.rows(), C = m.cols();
    s.D = m;
    s.U = IntMatrix::identity(R);
    s.Uinv = IntMatrix::identity(R);
    s.V = IntMatrix::identity(C);
    s.Vinv = IntMatrix::identity(C);
    IntMatrix& D = s.D;

    // Elementary operations applied to D are mirrored on U/V; the inverse
    // operation goes on the opposite side of Uinv/Vinv.
    auto row_swap = [&](int i, int j) {
        D.swap_rows(i, j);
        s.U.swap_rows(i, j);
        s.Uinv.swap_cols(i, j);
    };
    auto col_swap = [&](int i, int j) {
        D.swap_cols(i, j);
        s.V.swap_cols(i, j);
        s.Vinv.swap_rows(i, j);
    };
    auto row_add = [&](int i, int j, const mpz_class& f) { // row i += f*row j
        D.add_row(i, j, f);
        s.U.add_row(i, j, f);
        s.Uinv.add_col(j, i, -f);
    };
    auto col_add = [&](int i, int j, const mpz_class& f) { // col i += f*col j
        D.add_col(i, j, f);
        s.V.add_col(i, j, f);
        s.Vinv.add_row(j, i, -f);
    };
    auto row_neg = [&](int i) {
        D.negate_row(i);
        s.U.negate_row(i);
        s.Uinv.negate_col(i);
    };

    const int n = std::min(R, C);
    for (int k = 0; k < n; ++k) {
        int pr, pc;
        if (!find_pivot(D, k, pr, pc)) break;
        row_swap(k, pr);
        col_swap(k, pc);

        for (;;) {
            // Clear column k below the pivot, re-pivoting on remainders.
            bool again = false;
            for (int i = k + 1; i < R; ++i) {
                if (D.at(i, k) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(i, k).get_mpz_t(), D.at(k, k).get_mpz_t());
                row_add(i, k, -q);
                if (D.at(i, k) != 0) {
                    // remainder strictly smaller than pivot; promote it
                    row_swap(k, i);
                    again = true;
                }
            }
            if (again) continue;
            for (int j = k + 1; j < C; ++j) {
                if (D.at(k, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(k, j).get_mpz_t(), D.at(k, k).get_mpz_t());
                col_add(j, k, -q);
                if (D.at(k, j) != 0) {
                    col_swap(k, j);
                    again = true;
                }
            }
            if (!again) break;
        }

        if (D.at(k, k) < 0) row_neg(k);

        // Divisibility repair: if some remaining entry is not divisible by
        // the pivot, fold its row in and redo this step.
        bool redo = false;
        for (int i = k + 1; i < R && !redo; ++i)
            for (int j = k + 1; j < C; ++j) {
                if (D.at(i, j) % D.at(k, k) != 0) {
                    row_add(k, i, 1);
                    redo = true;
                    break;
                }
            }
        if (redo) --k;
    }

    int r = 0;
    for (int i = 0; i < n; ++i)
        if (D.at(i, i) != 0) ++r;
    s.rank = r;
    return s;
}

IntMatrix LatticeBasis::basis() const {
    IntMatrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = Uinv.at(i, j) * d[j];
    return b;
}

bool LatticeBasis::solve(const IntMatrix& x, IntMatrix& y) const {
    assert(x.rows() == n);
    IntMatrix w = U * x;
    y = IntMatrix(n, x.cols());
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < x.cols(); ++c) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), w.at(i, c).get_mpz_t(), d[i].get_mpz_t());
            if (r != 0) return false;
            mpz_divexact(y.at(i, c).get_mpz_t(), w.at(i, c).get_mpz_t(), d[i].get_mpz_t());
        }
    return true;
}

LatticeBasis lattice_basis(const IntMatrix& generators) {
    SmithForm s = smith_normal_form(generators);
    const int n = generators.rows();
    if (s.rank != n)
        throw AlgebraError("LatticeNotFullRank",
                           "lattice generators span rank " + std::to_string(s.rank) +
                               " < " + std::to_string(n));
    LatticeBasis b;
    b.n = n;
    b.U = std::move(s.U);
    b.Uinv = std::move(s.Uinv);
    b.d.resize(n);
    for (int i = 0; i < n; ++i) b.d[i] = s.D.at(i, i);
    return b;
}

} // namespace bicross
