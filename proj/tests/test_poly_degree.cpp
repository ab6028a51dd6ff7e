#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "intdeg/catalog.hpp"
#include "intdeg/poly_degree.hpp"
#include "test_support.hpp"

using namespace intdeg;
using testsupport::Rng;

namespace {

IntVec v2(long a, long b) { return IntVec{Int(a), Int(b)}; }
IntVec v3(long a, long b, long c) { return IntVec{Int(a), Int(b), Int(c)}; }

} // namespace

TEST_CASE("q_search threshold in the Dedekind example") {
    OrderAlgebra o = dedekind_cubic();
    SubringLattice a = dedekind_suborder(o);
    MonicPoly p = dedekind_poly();
    for (unsigned k = 0; k <= 3; ++k) CHECK_FALSE(q_search(o, a, p, k).has_value());
    auto q = q_search(o, a, p, 4);
    REQUIRE(q.has_value());
    CHECK(q->degree() == 4);
    for (const IntVec& c : monic_mul_coeffs(o, p, *q))
        CHECK(lattice_contains(a.lattice, c));
}

TEST_CASE("q_search trivial cases") {
    OrderAlgebra o = dedekind_cubic();
    SubringLattice b = subring_full(o);
    MonicPoly p = dedekind_poly();
    // over A = B the constant 1 works
    auto q = q_search(o, b, p, 0);
    REQUIRE(q.has_value());
    CHECK(q->degree() == 0);
    // over the suborder the constant fails (coefficients are odd in g1, g2)
    SubringLattice a = dedekind_suborder(o);
    CHECK_FALSE(q_search(o, a, p, 0).has_value());
}

TEST_CASE("quadratic irreducibility certificate") {
    OrderAlgebra o = dedekind_cubic();
    SubringLattice a = dedekind_suborder(o);
    MonicPoly p = dedekind_poly();
    auto res = quadratic_irreducibility(o, a, p, 2);
    CHECK(res.verdict == IrredVerdict::CertifiedIrreducible);
    CHECK(res.max_k_checked == 2);

    // a reducible quadratic: (T - g1)(T - g2) = T^2 - (g1+g2)T + g1*g2
    IntVec g1 = v3(0, 1, 0), g2 = v3(0, 0, 1);
    MonicPoly split;
    split.coeffs.push_back(v3(0, -1, -1));
    split.coeffs.push_back(elem_mul(o, g1, g2));
    auto res2 = quadratic_irreducibility(o, a, split, 2);
    CHECK(res2.verdict == IrredVerdict::Unknown);
    REQUIRE(res2.found_k.has_value());

    // p in A[T] succeeds immediately at k = 0
    SubringLattice b = subring_full(o);
    MonicPoly tsq{{v3(0, 0, 0), v3(0, -1, 0)}};  // T^2 - g1
    auto res3 = quadratic_irreducibility(o, b, tsq, 1);
    CHECK(res3.verdict == IrredVerdict::Unknown);
    CHECK(res3.found_k == 0);
}

TEST_CASE("integral degree of the Dedekind root is 6") {
    OrderAlgebra o = dedekind_cubic();
    SubringLattice a = dedekind_suborder(o);
    RootDegree rd = integral_degree_root(o, a, dedekind_poly(), true);
    CHECK(rd.n == 6);
    CHECK(rd.k_min == 4);
}

TEST_CASE("root degree over A = B is the polynomial degree") {
    OrderAlgebra o = dedekind_cubic();
    SubringLattice b = subring_full(o);
    RootDegree rd = integral_degree_root(o, b, dedekind_poly(), true);
    CHECK(rd.n == 2);
    CHECK(rd.k_min == 0);
}

TEST_CASE("tower report for the Dedekind pipeline") {
    OrderAlgebra o = dedekind_cubic();
    SubringLattice a = dedekind_suborder(o);
    TowerReport rep = tower_report(o, a, dedekind_poly(), false);
    CHECK(rep.d_AB == 2);
    CHECK(rep.d_BC == 2);
    CHECK(rep.id_alpha == 6);
    REQUIRE(rep.d_AC_exact.has_value());
    CHECK(*rep.d_AC_exact == 6);
    REQUIRE(rep.mu_AB_exact.has_value());
    CHECK(*rep.mu_AB_exact == 3);
    REQUIRE(rep.submultiplicative.has_value());
    CHECK_FALSE(*rep.submultiplicative);  // 6 > 2*2
    CHECK(rep.domains_bound == 12);
    CHECK(rep.domains_bound_holds);
    CHECK(rep.exponential_bound == 8);  // 2^2 * 2
    CHECK(rep.exponential_bound_holds);
    CHECK_FALSE(rep.irreducibility_asserted);
}

TEST_CASE("tower report with A = B") {
    OrderAlgebra o = dedekind_cubic();
    SubringLattice b = subring_full(o);
    TowerReport rep = tower_report(o, b, dedekind_poly(), true);
    CHECK(rep.d_AB == 1);
    CHECK(rep.id_alpha == 2);
    CHECK(rep.d_AC_exact == 2);
    CHECK(rep.mu_AB_exact == 1);
    CHECK(rep.submultiplicative == true);
}

TEST_CASE("root degree of T^2 - w over Z[sqrt(-3)], with numeric cross-check") {
    OrderAlgebra o = zeta6_order();
    SubringLattice a = zsqrt3_suborder(o);
    MonicPoly p{{v2(0, 0), v2(0, -1)}};  // T^2 - w
    // the one-sided certificate cannot decide here (k = 2 finds a cofactor),
    // so run with the irreducibility supplied as an assertion
    RootDegree rd = integral_degree_root(o, a, p, true);
    CHECK(rd.n == 4);
    CHECK(rd.k_min == 2);
    for (const IntVec& c : monic_mul_coeffs(o, p, rd.q))
        CHECK(lattice_contains(a.lattice, c));

    // independent numeric oracle: alpha = sqrt(w) in C, w = exp(i*pi/3);
    // no monic cubic with small coefficients in A vanishes at alpha
    using C = std::complex<double>;
    const C w = std::polar(1.0, std::acos(-1.0) / 3.0);
    const C alpha = std::sqrt(w);
    auto emb = [&](long x, long y) { return C(double(x)) + C(double(y)) * w; };
    double best = 1e9;
    for (long x1 = -3; x1 <= 3; ++x1)
        for (long y1 = -2; y1 <= 2; ++y1)
            for (long x2 = -3; x2 <= 3; ++x2)
                for (long y2 = -2; y2 <= 2; ++y2)
                    for (long x3 = -3; x3 <= 3; ++x3)
                        for (long y3 = -2; y3 <= 2; ++y3) {
                            // coefficients range over A: second coordinate even
                            C val = alpha * alpha * alpha +
                                    emb(x1, 2 * y1) * alpha * alpha +
                                    emb(x2, 2 * y2) * alpha + emb(x3, 2 * y3);
                            best = std::min(best, std::abs(val));
                        }
    CHECK(best > 1e-3);  // no small-coefficient cubic relation exists

    TowerReport rep = tower_report(o, a, p, true);
    CHECK(rep.d_AB == 2);
    CHECK(rep.id_alpha == 4);
    CHECK(rep.d_AC_lower <= rep.d_AC_upper);
    CHECK(rep.domains_bound_holds);
    CHECK(rep.exponential_bound_holds);
}

TEST_CASE("property: q_search soundness on random polynomials") {
    Rng rng(31337);
    OrderAlgebra o = dedekind_cubic();
    SubringLattice a = dedekind_suborder(o);
    int found = 0;
    for (int iter = 0; iter < 25; ++iter) {
        MonicPoly p;
        p.coeffs.push_back(testsupport::random_vec(rng, 3, -3, 3));
        p.coeffs.push_back(testsupport::random_vec(rng, 3, -3, 3));
        for (unsigned k = 0; k <= 4; ++k) {
            auto q = q_search(o, a, p, k);
            if (!q) continue;
            ++found;
            for (const IntVec& c : monic_mul_coeffs(o, p, *q))
                CHECK(lattice_contains(a.lattice, c));
            break;
        }
    }
    CHECK(found > 0);
}

TEST_CASE("precondition errors") {
    OrderAlgebra o = dedekind_cubic();
    SubringLattice a = dedekind_suborder(o);
    OrderAlgebra not_closed = dedekind_cubic();
    not_closed.assert_integrally_closed = false;
    SubringLattice a2 = dedekind_suborder(not_closed);
    CHECK_THROWS_AS(quadratic_irreducibility(not_closed, a2, dedekind_poly(), 2),
                    math_error);
    CHECK_THROWS_AS(integral_degree_root(not_closed, a2, dedekind_poly(), true),
                    math_error);
    MonicPoly cubic{{v3(0, 0, 0), v3(0, 0, 0), v3(1, 0, 0)}};
    CHECK_THROWS_AS(quadratic_irreducibility(o, a, cubic, 2), math_error);
}
