#pragma once

#include "bicross/barcomplex.hpp"
#include "bicross/mpcomplex.hpp"

#include <memory>
#include <mutex>
#include <string>

namespace bicross {

/// Pieces of a 2-cocycle f on the bismash group: g_f(nt) = f(n, t),
/// h = f + d(g_f), the two subgroup restrictions and the mixed part
/// f_c(t,n) = f(t, n) - f(t|>n, t<|n).  h satisfies
///   h(nt, n't') = f_T(t<|n', t') + f_N(n, t|>n') + f_c(t, n').
struct CocycleDecomposition {
    std::vector<i64> g_f; // normalized 1-cochain on H
    std::vector<i64> h;   // 2-cochain on H, cohomologous to f
    std::vector<i64> f_T; // 2-cocycle on T
    std::vector<i64> f_N; // 2-cocycle on N
    std::vector<i64> f_c; // element of C^{1,1}
};

struct KacMapReport {
    std::string name;
    Mat64 matrix;
    std::vector<i64> source_factors, target_factors;
};

struct KacPositionReport {
    std::string at;
    std::string image_factors, kernel_factors;
    bool exact = false;
};

struct KacSequenceReport {
    i64 modulus = 0;
    // H^1(H), H^1(T)+H^1(N), MP H^1, H^2(H), H^2(T)+H^2(N), MP H^2, H^3(H)
    std::vector<std::string> group_names;
    std::vector<std::string> group_factors;
    bool h3_presented = false;
    std::vector<KacMapReport> maps;           // the six maps
    std::vector<KacPositionReport> positions; // five interior positions
    bool res1_injective = false;
    bool composites_zero = false;
    bool all_exact = false;
};

/// The explicit low-degree generalized Kac sequence for one matched pair
/// at one modulus: the six maps at cochain level, the cocycle
/// decomposition toolkit, and the exactness verifier.
class KacEngine {
public:
    // T-slot order inside the degree-3 map's first term: A evaluates at
    // (t<|n', t'), B swaps the two slots.  A is the order under which the
    // outputs are cocycles and the sequence verifies exact on the genuine
    // factorization pairs; B is kept reachable for comparison runs.
    enum class PsiConvention { A, B };

    KacEngine(const GroupMatchedPair& mp, i64 m,
              PsiConvention conv = PsiConvention::A,
              long size_guard = 1L << 24, int h3_full_limit = 8);

    const BismashGroup& bismash() const { return m_bis; }
    const GroupCochainComplex& h_complex() const { return *m_hcx; }
    const MPDoubleComplex& mp_complex() const { return *m_mpcx; }
    i64 modulus() const { return m_m; }
    bool h3_presented() const { return m_h3_full; }

    // --- cochain-level maps -------------------------------------------
    // restriction of an i-cocycle on H to (T^i, N^i); i in {1,2,3}
    std::pair<std::vector<i64>, std::vector<i64>> res2(const std::vector<i64>& f, int degree) const;

    // degree 1: class of delta_N a + delta_T b in C^{1,1};
    // degree 2: components (f_1, f_2) = (-delta_T b, delta_N a)
    std::vector<i64> delta_pair_tot(const std::vector<i64>& a, const std::vector<i64>& b,
                                    int degree) const;

    // phi(gamma)(nt, n't') = gamma(t, n')
    std::vector<i64> phi(const std::vector<i64>& gamma) const;

    // psi(alpha, beta)(nt, n't', n''t'') = alpha(t<|n', t'; n'')
    //                                     + beta(t; n', t'|>n'')
    std::vector<i64> psi(const std::vector<i64>& alpha21, const std::vector<i64>& beta12) const;

    CocycleDecomposition decompose_cocycle(const std::vector<i64>& f) const;

    // f(nt,n't') = a(t<|n', t') + b(n, t|>n') - gamma(t, n'); the two
    // compatibility equations are checked first.
    std::vector<i64> assemble_cocycle(const std::vector<i64>& a, const std::vector<i64>& b,
                                      const std::vector<i64>& gamma) const;

    // --- full sequence ------------------------------------------------
    KacSequenceReport verify();

    // helpers shared with the tests
    bool is_h_cocycle(const std::vector<i64>& f, int degree) const;
    std::vector<std::vector<i64>> h_cocycle_basis(int degree) const;
    bool h_coboundary(const std::vector<i64>& f, int degree) const;

private:
    int h_index(int n, int t) const; // 1-cochain index of (n,t), -1 if id
    void require_cocycle(const std::vector<i64>& f, int degree, const char* who) const;

    GroupMatchedPair m_mp;
    BismashGroup m_bis;
    i64 m_m;
    PsiConvention m_conv;
    long m_guard;
    bool m_h3_full;
    std::unique_ptr<GroupCochainComplex> m_hcx;
    std::unique_ptr<GroupCochainComplex> m_tcx, m_ncx;
    std::unique_ptr<MPDoubleComplex> m_mpcx;
    mutable std::mutex m_solver_lock;
    mutable std::unique_ptr<ModSolver> m_b2_solver; // coboundary tests deg 2
    mutable std::unique_ptr<ModSolver> m_b3_solver; // coboundary tests deg 3
};

KacSequenceReport verify_kac_exactness(const GroupMatchedPair& mp, i64 m,
                                       KacEngine::PsiConvention conv = KacEngine::PsiConvention::A,
                                       long size_guard = 1L << 24, int h3_full_limit = 8);

} // namespace bicross
