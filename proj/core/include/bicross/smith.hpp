#pragma once

#include "bicross/intmatrix.hpp"

namespace bicross {

/// U*M*V = D with D diagonal, d_i | d_{i+1}, U and V unimodular.
/// Uinv and Vinv are tracked alongside so callers never have to invert.
struct SmithForm {
    IntMatrix U, D, V, Uinv, Vinv;
    int rank = 0;

    mpz_class diag(int i) const { return (i < std::min(D.rows(), D.cols())) ? D.at(i, i) : mpz_class(0); }
    // Nontrivial invariant factors (entries > 1).
    std::vector<mpz_class> invariant_factors() const;
};

/// Deterministic Smith normal form: pivot is the smallest-absolute-value
/// nonzero entry of the remaining submatrix, first occurrence in row-major
/// order.  Diagonal entries are made nonnegative.
SmithForm smith_normal_form(const IntMatrix& m);

/// Basis of the lattice spanned by the columns of g, assuming full row rank
/// (every caller includes a scaled identity among the generators).
/// Returns B along with the data needed to solve B*y = x exactly:
/// B = Uinv * diag(d), so y = diag(d)^{-1} * (U * x).
struct LatticeBasis {
    IntMatrix U, Uinv;
    std::vector<mpz_class> d; // diagonal, all > 0
    int n = 0;

    IntMatrix basis() const;
    // Solve B*y = x; returns false if x is not in the lattice.
    bool solve(const IntMatrix& x, IntMatrix& y) const;
};

LatticeBasis lattice_basis(const IntMatrix& generators);

} // namespace bicross
