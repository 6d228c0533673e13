#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace bicross {

/// Dense matrix over Z with arbitrary-precision entries.  Carrier for every
/// differential that reaches the Smith normal form machinery.
class IntMatrix {
public:
    IntMatrix() : m_rows(0), m_cols(0) {}
    IntMatrix(int rows, int cols)
        : m_rows(rows), m_cols(cols), m_e(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
    static IntMatrix diagonal(const std::vector<mpz_class>& d);

    int rows() const { return m_rows; }
    int cols() const { return m_cols; }

    mpz_class& at(int r, int c) { return m_e[static_cast<size_t>(r) * m_cols + c]; }
    const mpz_class& at(int r, int c) const { return m_e[static_cast<size_t>(r) * m_cols + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const;
    bool is_zero() const;

    IntMatrix transposed() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row i += f * row j
    void add_row(int i, int j, const mpz_class& f);
    void add_col(int i, int j, const mpz_class& f);
    void negate_row(int i);
    void negate_col(int i);

    // Determinant by Bareiss elimination; square matrices only.
    mpz_class det() const;

    std::string to_string() const;

private:
    int m_rows, m_cols;
    std::vector<mpz_class> m_e;
};

/// Dense matrix over Q.  Used only on the Lie-algebra side where the
/// coefficients live in a characteristic-zero field.
class RationalMatrix {
public:
    RationalMatrix() : m_rows(0), m_cols(0) {}
    RationalMatrix(int rows, int cols)
        : m_rows(rows), m_cols(cols), m_e(static_cast<size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);

    int rows() const { return m_rows; }
    int cols() const { return m_cols; }

    mpq_class& at(int r, int c) { return m_e[static_cast<size_t>(r) * m_cols + c]; }
    const mpq_class& at(int r, int c) const { return m_e[static_cast<size_t>(r) * m_cols + c]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const;
    bool is_zero() const;

    IntMatrix num_matrix_cleared() const; // clear denominators columnwise (tests)

    // Reduced row echelon form in place; returns pivot columns.
    std::vector<int> rref();
    int rank() const;
    // Basis of the right kernel, one column per basis vector.
    RationalMatrix kernel_basis() const;

    std::string to_string() const;

private:
    int m_rows, m_cols;
    std::vector<mpq_class> m_e;
};

} // namespace bicross
