#pragma once

#include "bicross/intmatrix.hpp"
#include "bicross/modmatrix.hpp"
#include "bicross/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bicross {

/// Free module with a diagonal relation lattice: Z^rank / diag(moduli).
/// Uniform Z/m modules are the special case moduli = (m,...,m).
struct DiagModule {
    std::vector<i64> moduli;

    DiagModule() = default;
    static DiagModule uniform(int rank, i64 m) {
        DiagModule d;
        d.moduli.assign(rank, m);
        return d;
    }

    int rank() const { return static_cast<int>(moduli.size()); }
    i64 lcm() const {
        i64 l = 1;
        for (i64 m : moduli) l = lcm64(l, m);
        return l;
    }
};

/// Finite abelian group presented by invariant factors d_1 | d_2 | ...,
/// with generator representatives living in an ambient cochain module and
/// a reduce map sending any ambient cocycle to its coordinate vector.
class Presentation {
public:
    Presentation() = default;

    const std::vector<mpz_class>& invariant_factors() const { return m_factors; }
    const DiagModule& ambient() const { return m_ambient; }
    const std::vector<std::vector<i64>>& generators() const { return m_gens; }

    int num_generators() const { return static_cast<int>(m_factors.size()); }
    bool is_trivial() const { return m_factors.empty(); }
    mpz_class order() const;
    std::string factors_string() const; // "Z/2 + Z/4" or "0"

    // Coordinates of an ambient cocycle over the invariant factors.
    // Throws NotInKernel if the element is not a cocycle of the complex
    // this presentation was computed from.
    std::vector<mpz_class> reduce(const std::vector<i64>& ambient_elt) const;
    std::vector<i64> reduce64(const std::vector<i64>& ambient_elt) const;

    // The ambient representative of a coordinate vector.
    std::vector<i64> lift(const std::vector<i64>& coords) const;

    // Invariant factors as i64 (they divide the ambient lcm, hence small).
    std::vector<i64> factors64() const;

    static Presentation trivial(const DiagModule& ambient);

    friend Presentation subquotient_presentation(const std::vector<std::vector<i64>>&,
                                                 const std::vector<std::vector<i64>>&,
                                                 const DiagModule&);

private:
    std::vector<mpz_class> m_factors;
    DiagModule m_ambient;
    std::vector<std::vector<i64>> m_gens; // canonical reps mod ambient moduli

    // reduce data: the whole subquotient is killed by Mstar = lcm(moduli),
    // so the cocycle lattice is diagonalized mod Mstar^2 and the quotient
    // lattice mod Mstar; all entries stay bounded.
    Mat64 m_UK;               // mod Msq
    std::vector<i64> m_dK;    // invariant factors of the cocycle lattice
    Mat64 m_UW;               // mod Mstar
    std::vector<i64> m_all_factors;
    std::vector<int> m_keep;  // positions of factors > 1
    i64 m_Mstar = 0, m_Msq = 0;
};

/// ker(d_out)/im(d_in) at the middle module, with element tracking.
/// Throws CompositionNotZero when d_out*d_in != 0 over the target relations.
Presentation homology_at(const Mat64& d_in, const Mat64& d_out, const DiagModule& m_in,
                         const DiagModule& m_mid, const DiagModule& m_out);

/// Z/B for explicitly given generating sets of cocycles and coboundaries
/// inside an ambient module; B must lie in the span of Z.  This is the
/// common core of homology_at and of the bidegree/edge subquotients.
Presentation subquotient_presentation(const std::vector<std::vector<i64>>& z_gens,
                                      const std::vector<std::vector<i64>>& b_gens,
                                      const DiagModule& ambient);

/// Uniform-modulus convenience wrapper.
Presentation homology_at(const Mat64& d_in, const Mat64& d_out, i64 m);

/// Deterministic solver for A x = b over Z/m via Smith normal form:
/// the solution is coordinatewise minimal with respect to the SNF basis.
std::optional<std::vector<i64>> solve_mod(const Mat64& a, const std::vector<i64>& b, i64 m);

// --------------------------------------------------------------- subgroups

/// Subgroup of a finite abelian group given in coordinates over moduli
/// (o_1,...,o_k); canonical once built, so equality is form equality.
class Subgroup {
public:
    Subgroup(std::vector<i64> ambient_moduli, const std::vector<std::vector<i64>>& gens);

    const std::vector<i64>& ambient_moduli() const { return m_moduli; }
    bool contains(const std::vector<i64>& coords) const;
    bool operator==(const Subgroup& rhs) const;
    bool is_trivial() const;
    unsigned long long order() const;
    std::vector<mpz_class> invariant_factors() const;
    std::string factors_string() const;

private:
    std::vector<i64> m_moduli;
    i64 m_lcm; // of ambient moduli, >= 2 for the embedded form
    std::vector<std::vector<i64>> m_gens;
    std::optional<HowellForm> m_form; // over Z/lcm, scaled embedding
};

/// Kernel of the map x -> M x between coordinate groups, as a subgroup of
/// the source.  M must be a well-defined homomorphism (checked).
Subgroup kernel_subgroup(const Mat64& map, const std::vector<i64>& source_moduli,
                         const std::vector<i64>& target_moduli);

Subgroup image_subgroup(const Mat64& map, const std::vector<i64>& target_moduli);

/// Assert M maps the relations of the source into the relations of the
/// target, i.e. o_i * (column i) == 0 in the target.
bool map_well_defined(const Mat64& map, const std::vector<i64>& source_moduli,
                      const std::vector<i64>& target_moduli);

} // namespace bicross
