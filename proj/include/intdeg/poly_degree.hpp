#pragma once

/* Monic polynomials over an order and the degree machinery for simple
 * extensions C = B[alpha]: searching for monic cofactors q with p*q over
 * the subring, the one-sided irreducibility certificate built from that
 * search, the integral degree of a root, and the assembled two-step
 * degree report. */

#include <optional>

#include "intdeg/orders.hpp"

namespace intdeg {

/* Monic polynomial with coefficients in the algebra; coeffs lists the
 * coefficients of T^{m-1} .. T^0 (the leading 1 is implicit). Inputs must
 * have degree >= 1; internal results may be the constant 1 (degree 0). */
struct MonicPoly {
    std::vector<IntVec> coeffs;

    std::size_t degree() const { return coeffs.size(); }
    /// coefficient of T^{degree - i}; i = 0 gives the leading 1
    IntVec coeff_desc(const OrderAlgebra& o, std::size_t i) const;
};

/// Non-leading coefficients of the (monic) product p*q, for T^{m+k-1}..T^0.
std::vector<IntVec> monic_mul_coeffs(const OrderAlgebra& o, const MonicPoly& p,
                                     const MonicPoly& q);

bool poly_coeffs_in(const OrderAlgebra& o, const SubringLattice& a, const MonicPoly& p);

/* Monic q in B[T] of degree k with every coefficient of p*q in A, or
 * nullopt when no such q exists. The decision is exact: the coefficient
 * conditions form a linear congruence system modulo the A-lattice. */
std::optional<MonicPoly> q_search(const OrderAlgebra& o, const SubringLattice& a,
                                  const MonicPoly& p, unsigned k);

enum class IrredVerdict { CertifiedIrreducible, Unknown };

struct IrreducibilityResult {
    IrredVerdict verdict = IrredVerdict::Unknown;
    unsigned max_k_checked = 0;
    std::optional<unsigned> found_k;  // smallest k at which a q appeared
};

/* One-sided certificate for a monic quadratic p over an integrally closed
 * B: if p splits over the fraction field, its roots lie in B, and their
 * minimal equations over A produce a monic q of degree <= 2*(d_AB - 1)
 * with p*q over A. Absence of such q for all k up to the bound certifies
 * irreducibility; presence proves nothing, hence Unknown. */
IrreducibilityResult quadratic_irreducibility(const OrderAlgebra& o,
                                              const SubringLattice& a,
                                              const MonicPoly& p, unsigned d_ab);

struct RootDegree {
    unsigned n = 0;      // integral degree of a root of p over A
    unsigned k_min = 0;  // n = deg(p) + k_min
    MonicPoly q;         // witness cofactor: p*q is the minimal equation
};

/* Integral degree over A of a root alpha of p, for p irreducible over the
 * fraction field of B and B integrally closed: every monic A-polynomial
 * vanishing at alpha factors as p*q with q monic in B[T], so the degree is
 * deg(p) + min{k : q_search succeeds}. The search is capped at
 * k <= (rank - 1)*deg(p); exceeding the cap contradicts the preconditions. */
RootDegree integral_degree_root(const OrderAlgebra& o, const SubringLattice& a,
                                const MonicPoly& p, bool irreducible_asserted);

/* Degree report for A <= B <= C = B[alpha]:
 * d_BC = deg(p); id_alpha <= d_AC <= mu_AB * d_BC, with mu_AB between
 * max(d_AB, ceil(id_alpha/d_BC)) and min(rank, [B:A]). Exact values are
 * reported when the bounds meet. */
struct TowerReport {
    unsigned d_AB = 0;
    unsigned d_BC = 0;
    unsigned id_alpha = 0;
    unsigned k_min = 0;
    unsigned d_AC_lower = 0;
    unsigned d_AC_upper = 0;
    std::optional<unsigned> d_AC_exact;
    unsigned mu_AB_lower = 0;
    unsigned mu_AB_upper = 0;
    std::optional<unsigned> mu_AB_exact;
    std::optional<bool> submultiplicative;  // d_AC <= d_AB * d_BC, when decidable
    Int domains_bound = 0;                  // mu_AB * d_AB * d_BC (upper bound if inexact)
    bool domains_bound_holds = false;
    Int exponential_bound = 0;              // d_AB^{d_BC} * d_BC
    bool exponential_bound_holds = false;
    bool irreducibility_asserted = false;
};

TowerReport tower_report(const OrderAlgebra& o, const SubringLattice& a,
                         const MonicPoly& p, bool irreducible_asserted);

} // namespace intdeg
