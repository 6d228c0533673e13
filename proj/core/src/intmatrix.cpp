#include "bicross/intmatrix.hpp"

#include <cassert>
#include <sstream>

namespace bicross {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<mpz_class>& d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    assert(m_cols == rhs.m_rows);
    IntMatrix out(m_rows, rhs.m_cols);
    mpz_class acc;
    for (int i = 0; i < m_rows; ++i) {
        for (int k = 0; k < m_cols; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.m_cols; ++j) {
                if (rhs.at(k, j) == 0) continue;
                acc = a * rhs.at(k, j);
                out.at(i, j) += acc;
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    assert(m_rows == rhs.m_rows && m_cols == rhs.m_cols);
    IntMatrix out(m_rows, m_cols);
    for (size_t i = 0; i < m_e.size(); ++i) out.m_e[i] = m_e[i] - rhs.m_e[i];
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
    return m_rows == rhs.m_rows && m_cols == rhs.m_cols && m_e == rhs.m_e;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : m_e)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(m_cols, m_rows);
    for (int i = 0; i < m_rows; ++i)
        for (int j = 0; j < m_cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m_cols; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m_rows; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(int i, int j, const mpz_class& f) {
    if (f == 0) return;
    mpz_class t;
    for (int c = 0; c < m_cols; ++c) {
        t = f * at(j, c);
        at(i, c) += t;
    }
}

void IntMatrix::add_col(int i, int j, const mpz_class& f) {
    if (f == 0) return;
    mpz_class t;
    for (int r = 0; r < m_rows; ++r) {
        t = f * at(r, j);
        at(r, i) += t;
    }
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < m_cols; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int i) {
    for (int r = 0; r < m_rows; ++r) at(r, i) = -at(r, i);
}

mpz_class IntMatrix::det() const {
    assert(m_rows == m_cols);
    if (m_rows == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < m_rows - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < m_rows; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < m_rows; ++i) {
            for (int j = k + 1; j < m_cols; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = q;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign * a.at(m_rows - 1, m_cols - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < m_rows; ++i) {
        for (int j = 0; j < m_cols; ++j) os << at(i, j) << (j + 1 < m_cols ? " " : "");
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- rationals

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    assert(m_cols == rhs.m_rows);
    RationalMatrix out(m_rows, rhs.m_cols);
    for (int i = 0; i < m_rows; ++i)
        for (int k = 0; k < m_cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < rhs.m_cols; ++j) {
                if (rhs.at(k, j) == 0) continue;
                out.at(i, j) += at(i, k) * rhs.at(k, j);
            }
        }
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    assert(m_rows == rhs.m_rows && m_cols == rhs.m_cols);
    RationalMatrix out(m_rows, m_cols);
    for (size_t i = 0; i < m_e.size(); ++i) out.m_e[i] = m_e[i] - rhs.m_e[i];
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
    return m_rows == rhs.m_rows && m_cols == rhs.m_cols && m_e == rhs.m_e;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : m_e)
        if (x != 0) return false;
    return true;
}

IntMatrix RationalMatrix::num_matrix_cleared() const {
    IntMatrix out(m_rows, m_cols);
    for (int j = 0; j < m_cols; ++j) {
        mpz_class l = 1;
        for (int i = 0; i < m_rows; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).get_den().get_mpz_t());
        for (int i = 0; i < m_rows; ++i) {
            mpq_class v = at(i, j) * mpq_class(l);
            out.at(i, j) = v.get_num();
        }
    }
    return out;
}

std::vector<int> RationalMatrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m_cols && r < m_rows; ++c) {
        int p = -1;
        for (int i = r; i < m_rows; ++i)
            if (at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m_cols; ++j) std::swap(at(p, j), at(r, j));
        mpq_class inv = 1 / at(r, c);
        for (int j = 0; j < m_cols; ++j) at(r, j) *= inv;
        for (int i = 0; i < m_rows; ++i) {
            if (i == r || at(i, c) == 0) continue;
            mpq_class f = at(i, c);
            for (int j = 0; j < m_cols; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int RationalMatrix::rank() const {
    RationalMatrix a = *this;
    return static_cast<int>(a.rref().size());
}

RationalMatrix RationalMatrix::kernel_basis() const {
    RationalMatrix a = *this;
    std::vector<int> pivots = a.rref();
    std::vector<bool> is_pivot(m_cols, false);
    for (int c : pivots) is_pivot[c] = true;
    int nfree = m_cols - static_cast<int>(pivots.size());
    RationalMatrix out(m_cols, nfree);
    int k = 0;
    for (int c = 0; c < m_cols; ++c) {
        if (is_pivot[c]) continue;
        out.at(c, k) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            out.at(pivots[pi], k) = -a.at(static_cast<int>(pi), c);
        ++k;
    }
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < m_rows; ++i) {
        for (int j = 0; j < m_cols; ++j) os << at(i, j) << (j + 1 < m_cols ? " " : "");
        os << "\n";
    }
    return os.str();
}

} // namespace bicross
