#pragma once

/* Commutative rings finite and free over Z, presented by structure
 * constants, together with finite-index subrings given as lattices.
 * Provides the integral degree of an element, the integral degree of the
 * extension, the conductor, and local degree profiles at rational primes. */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intdeg/exactlin.hpp"

namespace intdeg {

/* A ring B, free of rank r over Z with basis g_0..g_{r-1}, multiplication
 * given by g_i*g_j = sum_k table[i][j][k] * g_k. The two assertion flags
 * are user-supplied facts about B, never computed. */
struct OrderAlgebra {
    std::size_t rank = 0;
    std::vector<std::string> basis_names;
    IntVec unit;
    std::vector<std::vector<IntVec>> table;
    bool assert_fraction_field_is_field = false;
    bool assert_integrally_closed = false;
};

/* Checks commutativity, associativity over all rank^3 triples, the unit
 * law, and spot-checks that multiplication by nonzero sample elements is
 * injective (the domain assumption). Throws math_error naming the first
 * failing pair or triple. */
void validate_algebra(const OrderAlgebra& o);

IntVec elem_mul(const OrderAlgebra& o, const IntVec& x, const IntVec& y);
IntVec elem_pow(const OrderAlgebra& o, const IntVec& x, unsigned n);
bool elem_is_zero(const IntVec& x);

/// Matrix of multiplication by x in row convention: y*M = coords of x*y.
IntMatrix mult_matrix(const OrderAlgebra& o, const IntVec& x);

/// Characteristic polynomial of a square integer matrix; coefficients
/// ascending, c[n] = 1 (Faddeev-LeVerrier, exact).
std::vector<Int> char_poly(const IntMatrix& m);

/* A subring A of the algebra, stored as a lattice: either full rank
 * (finite index in B) or exactly Z*1. Construction verifies that the
 * lattice contains the unit and is closed under multiplication. */
struct SubringLattice {
    const OrderAlgebra* parent = nullptr;
    Lattice lattice;
};

SubringLattice make_subring(const OrderAlgebra& o, const IntMatrix& basis_rows);
SubringLattice subring_unit_z(const OrderAlgebra& o);
/// The order Z*1 + f*B; always a subring, of index f^(rank-1) in B.
SubringLattice subring_conductor_order(const OrderAlgebra& o, const Int& f);
SubringLattice subring_full(const OrderAlgebra& o);

/// A-span of {x*b^i : x in A-basis, 0 <= i < n}.
Lattice power_module(const OrderAlgebra& o, const SubringLattice& a, const IntVec& b,
                     unsigned n);

/* Minimal n >= 1 with b^n + a_1 b^{n-1} + ... + a_n = 0 for a_i in A,
 * together with the witness coefficients. The equation re-evaluates to
 * zero exactly and no smaller degree admits one. */
struct DegreeWitness {
    unsigned n = 0;
    std::vector<IntVec> coeffs;  // a_1 .. a_n
};

/* The search is capped at n = rank: A contains Z*1, and the characteristic
 * polynomial of multiplication by b is a monic integer polynomial of
 * degree rank vanishing at b, so membership at n = rank always holds. */
DegreeWitness integral_degree_element(const OrderAlgebra& o, const SubringLattice& a,
                                      const IntVec& b);

/// Local variant at a rational prime p: membership after localizing at p,
/// decided through minimal denominators coprime to p.
unsigned local_integral_degree(const OrderAlgebra& o, const SubringLattice& a,
                               const IntVec& b, const Int& p);

struct ExactDegree {
    unsigned d = 0;
    IntVec witness;  // an element attaining the maximum
};

/* d = max of integral_degree_element over one representative per coset of
 * B/A. Correct because the integral degree is constant on cosets b + A:
 * substituting T -> T - a maps monic degree-n polynomials over A vanishing
 * at b + a to monic degree-n polynomials over A vanishing at b, and back.
 * Requires [B:A] finite. */
ExactDegree exact_degree(const OrderAlgebra& o, const SubringLattice& a);

/// For an order in a number field (asserted via fraction_field_is_field):
/// the integral degree over Z equals the rank.
unsigned degree_over_Z(const OrderAlgebra& o);

/// Conductor {x in B : x*B <= A}, the largest ideal of B contained in A.
/// Computed as the intersection of the preimages of A under multiplication
/// by each basis element; the ideal property is verified on basis products.
Lattice conductor(const OrderAlgebra& o, const SubringLattice& a);

/* Local degrees at the rational primes dividing [B:A]; away from these
 * primes the localizations agree and the local degree is 1. Each entry is
 * computed from the p-primary coset classes. A prime may carry several
 * maximal ideals; the profile records the maximum over the p-local
 * computation. */
struct LocalDegreeProfile {
    std::map<Int, unsigned> entries;
    unsigned generic_value = 1;

    unsigned max_value() const;
};

LocalDegreeProfile local_degree_profile(const OrderAlgebra& o, const SubringLattice& a);

} // namespace intdeg
