#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bicross {

/// Finite group given by its full multiplication table.  Element 0 is the
/// identity; ordering is the input order and stays fixed, since cochain
/// tables are indexed by it.
class FiniteGroup {
public:
    FiniteGroup() = default;

    int order() const { return m_order; }
    int mul(int a, int b) const { return m_mul[static_cast<size_t>(a) * m_order + b]; }
    int inv(int a) const { return m_inv[a]; }
    int id() const { return 0; }
    const std::string& name() const { return m_name; }
    void set_name(std::string n) { m_name = std::move(n); }

    int element_order(int a) const;
    // order -> number of elements of that order; isomorphism fingerprint
    // for the desk-scale checks.
    std::map<int, int> order_statistics() const;
    bool is_abelian() const;

    /// Validate a multiplication table: two-sided identity at index 0,
    /// associativity over all triples, inverses.  Throws AlgebraError with
    /// codes NoIdentity, NotAssociative (with witness triple), NoInverse.
    static FiniteGroup validate(const std::vector<std::vector<int>>& table,
                                std::string name = "");

    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n);      // n <= 5 at desk scale
    static FiniteGroup dihedral(int n);       // order 2n, rotations first
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup trivial();

private:
    int m_order = 0;
    std::vector<int> m_mul;
    std::vector<int> m_inv;
    std::string m_name;
};

/// Matched pair of finite groups: a left action of T on N (t |> n) and a
/// right action of N on T (t <| n) whose compatibility makes N x T a group
/// under the twisted multiplication.
class GroupMatchedPair {
public:
    const FiniteGroup& T() const { return m_t; }
    const FiniteGroup& N() const { return m_n; }

    int act_left(int t, int n) const { return m_left[static_cast<size_t>(t) * m_n.order() + n]; }   // t |> n
    int act_right(int t, int n) const { return m_right[static_cast<size_t>(t) * m_n.order() + n]; } // t <| n

    bool left_action_trivial() const;
    bool right_action_trivial() const;

    // t |> (n_1,...,n_p) = (t|>n_1, (t<|n_1) |> rest); length preserved.
    std::vector<int> act_left_tuple(int t, const std::vector<int>& ns) const;
    // (t_1,...,t_q) <| n = ((t_1..t_{q-1}) <| (t_q |> n), t_q <| n).
    std::vector<int> act_right_tuple(const std::vector<int>& ts, int n) const;

    /// Exhaustive validation of the four matched-pair axioms plus the two
    /// action laws; throws AlgebraError("AxiomViolation", ...) with the
    /// axiom name and witness tuple.
    static GroupMatchedPair validate(FiniteGroup t, FiniteGroup n,
                                     const std::vector<std::vector<int>>& act_left,
                                     const std::vector<std::vector<int>>& act_right);

    static GroupMatchedPair trivial_pair(FiniteGroup t, FiniteGroup n);

private:
    GroupMatchedPair() = default;
    FiniteGroup m_t, m_n;
    std::vector<int> m_left, m_right;
};

/// The group on N x T with (n,t)(m,s) = (n (t|>m), (t<|m) s), together
/// with the projections and the subgroup embeddings of N and T.
class BismashGroup {
public:
    explicit BismashGroup(const GroupMatchedPair& mp);

    const FiniteGroup& group() const { return m_g; }
    const GroupMatchedPair& pair() const { return m_mp; }

    int index_of(int n, int t) const { return n * m_mp.T().order() + t; }
    int n_part(int h) const { return h / m_mp.T().order(); }
    int t_part(int h) const { return h % m_mp.T().order(); }
    int embed_n(int n) const { return index_of(n, 0); }
    int embed_t(int t) const { return index_of(0, t); }

private:
    GroupMatchedPair m_mp;
    FiniteGroup m_g;
};

/// Decompose F = N*T (exact factorization, N and T given by element lists)
/// into the matched pair with t*n = (t|>n)*(t<|n) in F.
/// Throws NotSubgroup / NotExactFactorization.
GroupMatchedPair from_exact_factorization(const FiniteGroup& f, const std::vector<int>& n_elems,
                                          const std::vector<int>& t_elems);

/// Is (n,t) -> n*t an isomorphism from bismash(mp of F) onto F?  Used by
/// the factorization round-trip checks.
bool bismash_matches_group(const BismashGroup& b, const FiniteGroup& f,
                           const std::vector<int>& n_elems, const std::vector<int>& t_elems);

} // namespace bicross
