#include "intdeg/catalog.hpp"

namespace intdeg {

namespace {

IntVec v2(long a, long b) { return IntVec{Int(a), Int(b)}; }
IntVec v3(long a, long b, long c) { return IntVec{Int(a), Int(b), Int(c)}; }
IntVec v4(long a, long b, long c, long d) { return IntVec{Int(a), Int(b), Int(c), Int(d)}; }

OrderAlgebra quadratic(const std::string& name, IntVec gen_square) {
    OrderAlgebra o;
    o.rank = 2;
    o.basis_names = {"1", name};
    o.unit = v2(1, 0);
    o.table = {{v2(1, 0), v2(0, 1)}, {v2(0, 1), std::move(gen_square)}};
    o.assert_fraction_field_is_field = true;
    o.assert_integrally_closed = true;
    validate_algebra(o);
    return o;
}

} // namespace

OrderAlgebra dedekind_cubic() {
    OrderAlgebra o;
    o.rank = 3;
    o.basis_names = {"1", "g1", "g2"};
    o.unit = v3(1, 0, 0);
    o.table.assign(3, std::vector<IntVec>(3));
    o.table[0][0] = v3(1, 0, 0);
    o.table[0][1] = o.table[1][0] = v3(0, 1, 0);
    o.table[0][2] = o.table[2][0] = v3(0, 0, 1);
    o.table[1][1] = v3(0, -1, 2);   // g1^2 = -g1 + 2 g2
    o.table[1][2] = o.table[2][1] = v3(4, 0, 2);  // g1 g2 = 4 + 2 g2
    o.table[2][2] = v3(6, 2, 3);    // g2^2 = 6 + 2 g1 + 3 g2
    o.assert_fraction_field_is_field = true;
    o.assert_integrally_closed = true;
    validate_algebra(o);
    return o;
}

SubringLattice dedekind_suborder(const OrderAlgebra& o) {
    return make_subring(o, IntMatrix::from_rows({v3(1, 0, 0), v3(0, 2, 0), v3(0, 0, 2)}, 3));
}

MonicPoly dedekind_poly() {
    return MonicPoly{{v3(0, 1, 0), v3(1, 0, 1)}};  // T^2 + g1 T + (1 + g2)
}

OrderAlgebra gaussian_integers() { return quadratic("i", v2(-1, 0)); }

OrderAlgebra eisenstein_integers() { return quadratic("z", v2(-1, -1)); }

OrderAlgebra zeta6_order() { return quadratic("w", v2(-1, 1)); }

SubringLattice zsqrt3_suborder(const OrderAlgebra& o) {
    // spanned by 1 and sqrt(-3) = -1 + 2w
    return make_subring(o, IntMatrix::from_rows({v2(1, 0), v2(-1, 2)}, 2));
}

OrderAlgebra sqrt23_order() {
    OrderAlgebra o;
    o.rank = 4;
    o.basis_names = {"1", "r2", "r3", "r6"};
    o.unit = v4(1, 0, 0, 0);
    o.table.assign(4, std::vector<IntVec>(4));
    for (std::size_t j = 0; j < 4; ++j) {
        IntVec e(4);
        e[j] = 1;
        o.table[0][j] = e;
        o.table[j][0] = e;
    }
    o.table[1][1] = v4(2, 0, 0, 0);
    o.table[2][2] = v4(3, 0, 0, 0);
    o.table[3][3] = v4(6, 0, 0, 0);
    o.table[1][2] = o.table[2][1] = v4(0, 0, 0, 1);  // r2*r3 = r6
    o.table[1][3] = o.table[3][1] = v4(0, 0, 2, 0);  // r2*r6 = 2*r3
    o.table[2][3] = o.table[3][2] = v4(0, 3, 0, 0);  // r3*r6 = 3*r2
    o.assert_fraction_field_is_field = true;
    o.assert_integrally_closed = false;  // not the maximal order of Q(r2, r3)
    validate_algebra(o);
    return o;
}

std::vector<OrderAlgebra> harness_catalog() {
    return {gaussian_integers(), eisenstein_integers(), dedekind_cubic(), sqrt23_order()};
}

} // namespace intdeg
