#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

namespace bicross {

using i64 = std::int64_t;

// Canonical representative in [0, m).
inline i64 mod_reduce(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 xgcd64(i64 a, i64 b, i64& x, i64& y);
i64 gcd64(i64 a, i64 b);
i64 lcm64(i64 a, i64 b);
// Unit u (mod m) with u*a == gcd(a,m) (mod m).
i64 unit_to_gcd(i64 a, i64 m);

/// Dense row-major matrix with small integer entries; every mod-m cochain
/// differential in the artifact is carried by one of these.  Entries are
/// kept reduced by the routines that consume them; m stays well below
/// 2^31 so products never overflow.
struct Mat64 {
    int rows = 0, cols = 0;
    std::vector<i64> e;

    Mat64() = default;
    Mat64(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, 0) {}

    static Mat64 identity(int n);

    i64& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }

    Mat64 transposed() const;
    Mat64 mul_mod(const Mat64& rhs, i64 m) const;
    std::vector<i64> apply_mod(const std::vector<i64>& x, i64 m) const;
    bool is_zero_mod(i64 m) const;
    // this - rhs, reduced mod m
    Mat64 sub_mod(const Mat64& rhs, i64 m) const;
    Mat64 add_mod(const Mat64& rhs, i64 m) const;
    Mat64 scaled_mod(i64 c, i64 m) const;

    // Vertical stack [this; below]
    Mat64 stacked(const Mat64& below) const;
    // Horizontal [this | right]
    Mat64 beside(const Mat64& right) const;
};

/// Row-space Howell form over Z/m with an optional tracked tail block.
/// The Howell property (every span element with leading zeros lies in the
/// span of the rows with the same leading zeros) is what makes kernel
/// extraction and membership tests exact over Z/m with zero divisors.
class HowellForm {
public:
    // width = number of pivot-eligible columns, tail = carried columns.
    HowellForm(int width, int tail, i64 m);

    void add_row(std::vector<i64> row); // length width+tail
    // Echelon + saturation + above-pivot reduction; idempotent.
    void finalize();

    int width() const { return m_width; }
    int tail() const { return m_tail; }
    i64 modulus() const { return m_m; }

    const std::vector<std::vector<i64>>& rows() const { return m_rows; }

    // Reduce v (length width+tail) against the form; leading width entries
    // of the result are zero iff the width-part lies in the span.
    std::vector<i64> reduce(std::vector<i64> v) const;

    bool spans(const std::vector<i64>& v) const; // width-part membership

    // Number of elements of the row span (product of m/leading).
    // Valid only when tail == 0.
    unsigned long long span_size() const;
    // Exponent vector of the span order: the sorted list of the cyclic
    // factors m/leading; exact at any rank.
    std::vector<i64> span_factors() const;

    bool operator==(const HowellForm& rhs) const;

private:
    int insert(std::vector<i64> row); // returns leftmost touched pivot col or -1
    int leading(const std::vector<i64>& v) const;

    int m_width, m_tail;
    i64 m_m;
    bool m_final = false;
    std::vector<std::vector<i64>> m_rows;      // sorted by leading column once final
    std::vector<int> m_pivot_of_col;           // -1 if none
    std::deque<int> m_dirty;                   // pivot cols awaiting saturation
    std::vector<bool> m_dirty_flag;
};

/// Kernel, image-membership and linear solving over Z/m, built on a Howell
/// form of [A^T | I].
class ModSolver {
public:
    ModSolver(const Mat64& a, i64 m); // constraints A x = 0 / A x = b

    // Generators (as rows) of {x : A x == 0 (mod m)}; canonical.
    std::vector<std::vector<i64>> kernel() const;

    // Deterministic solution of A x == b (mod m), if any.
    std::optional<std::vector<i64>> solve(const std::vector<i64>& b) const;

    bool image_contains(const std::vector<i64>& b) const;

private:
    int m_nrows, m_ncols;
    i64 m_m;
    HowellForm m_form;
};

/// Diagonal form of a matrix over Z/M: U*A*V = diag(d) with U invertible
/// mod M, d_i | d_{i+1} | M (zero diagonal entries count as M).  V is not
/// tracked.  Exactly what a subquotient presentation needs when the
/// quotient is known to be killed by M: entries never leave [0, M), so
/// there is no coefficient growth.
struct DiagonalFormMod {
    Mat64 U, Uinv;
    std::vector<i64> d; // length = rows of A
    i64 modulus = 0;
};
DiagonalFormMod diagonalize_mod(const Mat64& a, i64 M);

/// Canonical Howell form of the row span of the given rows; used to
/// pre-reduce tall constraint systems and to compare subgroups.
HowellForm rowspace_howell(const std::vector<std::vector<i64>>& rows, int width, i64 m);

/// Generators of {x : A x == 0 (mod m)}; pre-reduces A by its row-space
/// Howell form when A is much taller than wide.
std::vector<std::vector<i64>> kernel_mod(const Mat64& a, i64 m);

} // namespace bicross
