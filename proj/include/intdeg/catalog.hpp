#pragma once

/* Concrete validated algebras used by the example registry, the randomized
 * harness, and the bundled input files. */

#include "intdeg/orders.hpp"
#include "intdeg/poly_degree.hpp"

namespace intdeg {

/// Ring of integers of the cubic field generated by a root of
/// T^3 - T^2 - 2T - 8, with basis {1, g1, g2}, g2 = (g1^2 + g1)/2.
/// The field is non-monogenic; its index-4 suborder <1, 2g1, 2g2> has
/// integral degree 2 but needs 3 module generators.
OrderAlgebra dedekind_cubic();
SubringLattice dedekind_suborder(const OrderAlgebra& o);
/// T^2 + g1*T + (1 + g2)
MonicPoly dedekind_poly();

/// Z[i], i^2 = -1.
OrderAlgebra gaussian_integers();

/// Z[z], z^2 = -1 - z (Eisenstein integers).
OrderAlgebra eisenstein_integers();

/// Z[w], w^2 = w - 1, i.e. w = (1 + sqrt(-3))/2; contains Z[sqrt(-3)]
/// as the index-2 suborder spanned by {1, -1 + 2w}.
OrderAlgebra zeta6_order();
SubringLattice zsqrt3_suborder(const OrderAlgebra& o);

/// Z[sqrt2, sqrt3] with basis {1, sqrt2, sqrt3, sqrt6} (a quartic order).
OrderAlgebra sqrt23_order();

/// The validated catalog used by the randomized harness.
std::vector<OrderAlgebra> harness_catalog();

} // namespace intdeg
