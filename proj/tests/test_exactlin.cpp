#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "intdeg/exactlin.hpp"
#include "test_support.hpp"

using namespace intdeg;
using testsupport::Rng;

namespace {

IntMatrix rows2(std::vector<std::vector<long>> rows) {
    std::vector<IntVec> r;
    for (auto& row : rows) r.emplace_back(row.begin(), row.end());
    return IntMatrix::from_rows(r, rows.empty() ? 0 : rows[0].size());
}

IntVec vec(std::vector<long> v) { return IntVec(v.begin(), v.end()); }

bool is_unimodular(const IntMatrix& m) {
    Int d = determinant(m);
    return d == 1 || d == -1;
}

// same-lattice check independent of canonical forms: mutual row membership
bool mutually_contained(const IntMatrix& a, const IntMatrix& b, std::size_t n) {
    Lattice la(n, a), lb(n, b);
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!lattice_contains(lb, a.row(i))) return false;
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (!lattice_contains(la, b.row(i))) return false;
    return true;
}

} // namespace

TEST_CASE("hnf: identity is a fixed point") {
    auto r = hnf(IntMatrix::identity(3));
    CHECK(r.H == IntMatrix::identity(3));
    CHECK(r.U == IntMatrix::identity(3));
    CHECK(r.rank == 3);
}

TEST_CASE("hnf: {(4,0),(2,2)} normalizes to {(2,2),(0,4)}") {
    IntMatrix m = rows2({{4, 0}, {2, 2}});
    auto r = hnf(m);
    IntMatrix expected = rows2({{2, 2}, {0, 4}});
    CHECK(r.H == expected);
    // oracle: the expected rows span the same lattice as the input rows
    CHECK(mutually_contained(m, expected, 2));
    CHECK(mat_mul(r.U, m) == r.H);
    CHECK(is_unimodular(r.U));
}

TEST_CASE("hnf: already-echelon input is unchanged") {
    IntMatrix m = rows2({{2, 0}, {0, 3}});
    CHECK(hnf(m).H == m);
}

TEST_CASE("snf: diag(2,3) -> diag(1,6)") {
    IntMatrix m = rows2({{2, 0}, {0, 3}});
    auto r = snf(m);
    CHECK(r.D.at(0, 0) == 1);
    CHECK(r.D.at(1, 1) == 6);
    CHECK(r.D.at(0, 1) == 0);
    CHECK(r.D.at(1, 0) == 0);
    CHECK(r.D.at(1, 1) % r.D.at(0, 0) == 0);
    CHECK(r.D.at(0, 0) * r.D.at(1, 1) == abs(determinant(m)));
    CHECK(is_unimodular(r.U));
    CHECK(is_unimodular(r.V));
    CHECK(mat_mul(mat_mul(r.U, m), r.V) == r.D);
}

TEST_CASE("snf: diag(2,2) is already Smith") {
    auto r = snf(rows2({{2, 0}, {0, 2}}));
    CHECK(r.D.at(0, 0) == 2);
    CHECK(r.D.at(1, 1) == 2);
}

TEST_CASE("snf: zero matrix") {
    auto r = snf(IntMatrix(2, 3));
    CHECK(r.D.is_zero());
    CHECK(is_unimodular(r.U));
    CHECK(is_unimodular(r.V));
}

TEST_CASE("lattice_contains with coordinate witness") {
    Lattice l = Lattice::span_of(2, {vec({2, 0}), vec({0, 2})});
    auto c = lattice_coords(l, vec({4, 2}));
    REQUIRE(c.has_value());
    CHECK(row_apply(*c, l.basis()) == vec({4, 2}));
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == 1);
    CHECK_FALSE(lattice_contains(l, vec({1, 0})));
    CHECK(lattice_contains(l, vec({0, 0})));
}

TEST_CASE("solve_min_denominator") {
    Lattice l = Lattice::span_of(2, {vec({2, 0}), vec({0, 2})});
    auto md = solve_min_denominator(l, vec({1, 1}));
    REQUIRE(md.has_value());
    CHECK(md->denom == 2);  // brute force: 1*(1,1) not in L, 2*(1,1) = (2,2) in L
    CHECK(lattice_contains(l, vec({2, 2})));

    auto inside = solve_min_denominator(l, vec({4, 2}));
    REQUIRE(inside.has_value());
    CHECK(inside->denom == 1);

    Lattice line = Lattice::span_of(2, {vec({1, 0})});
    CHECK_FALSE(solve_min_denominator(line, vec({0, 1})).has_value());
}

TEST_CASE("lattice_intersection against brute force") {
    Lattice l1 = Lattice::span_of(2, {vec({2, 0}), vec({0, 1})});
    Lattice l2 = Lattice::span_of(2, {vec({1, 0}), vec({0, 3})});
    Lattice li = lattice_intersection(l1, l2);
    CHECK(li == Lattice::span_of(2, {vec({2, 0}), vec({0, 3})}));
    // brute force over a bounded coordinate box
    for (long x = -6; x <= 6; ++x)
        for (long y = -6; y <= 6; ++y) {
            IntVec v = vec({x, y});
            bool both = lattice_contains(l1, v) && lattice_contains(l2, v);
            CHECK(both == lattice_contains(li, v));
        }
    CHECK(lattice_intersection(l1, l1) == l1);
    CHECK(lattice_intersection(l1, Lattice::full(2)) == l1);
}

TEST_CASE("lattice_index") {
    CHECK(lattice_index(Lattice::scaled(2, 2), Lattice::full(2)) == 4);
    Lattice dedekind = Lattice::span_of(3, {vec({1, 0, 0}), vec({0, 2, 0}), vec({0, 0, 2})});
    CHECK(lattice_index(dedekind, Lattice::full(3)) == 4);
    // cross-check by coset enumeration
    CHECK(coset_representatives(dedekind, Lattice::full(3)).size() == 4);
    CHECK(lattice_index(dedekind, dedekind) == 1);
    CHECK_THROWS_AS(lattice_index(Lattice::full(2), Lattice::scaled(2, 2)), math_error);
    CHECK_THROWS_AS(
        lattice_index(Lattice::span_of(2, {vec({1, 0})}), Lattice::full(2)), math_error);
}

TEST_CASE("coset_representatives") {
    Lattice full3 = Lattice::full(3);
    auto trivial = coset_representatives(full3, full3);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == vec({0, 0, 0}));

    Lattice dedekind = Lattice::span_of(3, {vec({1, 0, 0}), vec({0, 2, 0}), vec({0, 0, 2})});
    auto reps = coset_representatives(dedekind, full3);
    REQUIRE(reps.size() == 4);
    // pairwise non-congruent mod the sublattice
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            IntVec diff(3);
            for (int k = 0; k < 3; ++k) diff[k] = reps[i][k] - reps[j][k];
            CHECK_FALSE(lattice_contains(dedekind, diff));
        }
    // invariant factors of this pair are (1,2,2): the 3-primary part is trivial
    auto reps3 = coset_representatives(dedekind, full3, Int(3));
    REQUIRE(reps3.size() == 1);
    CHECK(reps3[0] == vec({0, 0, 0}));
}

TEST_CASE("solve_congruence_system") {
    // everything is in Z^r
    IntMatrix n = rows2({{5, -3}, {2, 1}});
    auto x = solve_congruence_system(n, vec({7, -2}), Lattice::full(2));
    REQUIRE(x.has_value());

    // parity: 2x + 1 is never even
    CHECK_FALSE(solve_congruence_system(rows2({{2}}), vec({1}), Lattice::scaled(1, 2))
                    .has_value());

    // 3x + 1 = 4 in 2Z at x = 1
    auto y = solve_congruence_system(rows2({{3}}), vec({1}), Lattice::scaled(1, 2));
    REQUIRE(y.has_value());
    Int val = 3 * (*y)[0] + 1;
    CHECK(val % 2 == 0);
}

TEST_CASE("solve_linear on rectangular systems") {
    IntMatrix a = rows2({{2, 0, 1}, {0, 3, 1}});
    IntVec b = vec({5, 7});
    auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    CHECK(mat_apply(a, *x) == b);
    // 2x = 1 has no integer solution
    CHECK_FALSE(solve_linear(rows2({{2}}), vec({1})).has_value());
}

TEST_CASE("property: hnf transform and canonicity on random input") {
    Rng rng(12345);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t rows = 1 + testsupport::rand_in(rng, 0, 4);
        std::size_t cols = 1 + testsupport::rand_in(rng, 0, 3);
        IntMatrix m = testsupport::random_matrix(rng, rows, cols);
        auto r = hnf(m);
        CHECK(mat_mul(r.U, m) == r.H);
        CHECK(is_unimodular(r.U));
        // canonicity: a different spanning set of the same row lattice
        // (rows shuffled, random row operations added) yields the same H
        IntMatrix m2(rows + 1, cols);
        std::vector<std::size_t> perm(rows);
        for (std::size_t i = 0; i < rows; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m2.at(i, j) = m.at(perm[i], j);
        for (std::size_t j = 0; j < cols; ++j) {
            Int acc = 0;
            for (std::size_t i = 0; i < rows; ++i)
                acc += Int(1 + (i % 3)) * m.at(i, j);
            m2.at(rows, j) = acc;
        }
        auto r2 = hnf(m2);
        CHECK(mutually_contained(m, m2, cols));
        CHECK(r2.rank == r.rank);
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                CHECK(r2.H.at(i, j) == r.H.at(i, j));
    }
}

TEST_CASE("property: snf chain, transforms, and determinant") {
    Rng rng(54321);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t rows = 1 + testsupport::rand_in(rng, 0, 3);
        std::size_t cols = 1 + testsupport::rand_in(rng, 0, 3);
        IntMatrix m = testsupport::random_matrix(rng, rows, cols);
        auto r = snf(m);
        CHECK(mat_mul(mat_mul(r.U, m), r.V) == r.D);
        CHECK(is_unimodular(r.U));
        CHECK(is_unimodular(r.V));
        std::size_t k = std::min(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(r.D.at(i, j) == 0);
        for (std::size_t i = 0; i + 1 < k; ++i) {
            CHECK(r.D.at(i, i) >= 0);
            if (r.D.at(i, i) != 0) CHECK(r.D.at(i + 1, i + 1) % r.D.at(i, i) == 0);
            else CHECK(r.D.at(i + 1, i + 1) == 0);
        }
        if (rows == cols) {
            Int prod = 1;
            for (std::size_t i = 0; i < k; ++i) prod *= r.D.at(i, i);
            CHECK(prod == abs(determinant(m)));
        }
    }
}

TEST_CASE("property: membership agrees with minimal denominator") {
    Rng rng(777);
    int in_count = 0, out_count = 0;
    for (int iter = 0; iter < 400; ++iter) {
        std::size_t n = 1 + testsupport::rand_in(rng, 0, 3);
        Lattice l = testsupport::random_full_lattice(rng, n);
        IntVec v = (iter % 2 == 0) ? testsupport::random_member(rng, l)
                                   : testsupport::random_vec(rng, n);
        bool member = lattice_contains(l, v);
        auto md = solve_min_denominator(l, v);
        REQUIRE(md.has_value());  // full rank: everything is in the rational span
        CHECK(member == (md->denom == 1));
        // the witness really works: denom * v has integer coordinates
        IntVec scaled(n);
        for (std::size_t j = 0; j < n; ++j) scaled[j] = md->denom * v[j];
        CHECK(lattice_contains(l, scaled));
        if (md->denom > 1) {
            IntVec smaller(n);
            for (std::size_t j = 0; j < n; ++j) smaller[j] = (md->denom - 1) * v[j];
            CHECK_FALSE(lattice_contains(l, smaller));
        }
        member ? ++in_count : ++out_count;
    }
    CHECK(in_count > 50);
    CHECK(out_count > 50);
}

TEST_CASE("property: index multiplicativity on nested triples") {
    Rng rng(2024);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t n = 1 + testsupport::rand_in(rng, 0, 2);
        Lattice l1 = testsupport::random_full_lattice(rng, n, -4, 4);
        IntMatrix t1 = testsupport::random_matrix(rng, n, n, -3, 3);
        if (determinant(t1) == 0) continue;
        Lattice l2(n, mat_mul(t1, l1.basis()));
        IntMatrix t2 = testsupport::random_matrix(rng, n, n, -3, 3);
        if (determinant(t2) == 0) continue;
        Lattice l3(n, mat_mul(t2, l2.basis()));
        CHECK(lattice_index(l3, l1) == lattice_index(l3, l2) * lattice_index(l2, l1));
    }
}

TEST_CASE("property: congruence solver is a decision procedure") {
    Rng rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t m = 1 + testsupport::rand_in(rng, 0, 2);
        std::size_t k = 1 + testsupport::rand_in(rng, 0, 2);
        Lattice l = testsupport::random_full_lattice(rng, m, -6, 6);
        IntMatrix n = testsupport::random_matrix(rng, m, k, -6, 6);
        // feasible by construction: choose x first, then t = member - N*x
        IntVec x0 = testsupport::random_vec(rng, k, -5, 5);
        IntVec member = testsupport::random_member(rng, l);
        IntVec nx = mat_apply(n, x0);
        IntVec t(m);
        for (std::size_t i = 0; i < m; ++i) t[i] = member[i] - nx[i];
        auto sol = solve_congruence_system(n, t, l);
        REQUIRE(sol.has_value());
        IntVec check = mat_apply(n, *sol);
        for (std::size_t i = 0; i < m; ++i) check[i] += t[i];
        CHECK(lattice_contains(l, check));
    }
}

TEST_CASE("preimage and kernel") {
    // {x : x*M = 0} for a rank-1 map
    IntMatrix m = rows2({{1, 2}, {2, 4}});
    IntMatrix ker = left_kernel(m);
    REQUIRE(ker.rows() == 1);
    IntVec kr = ker.row(0);
    CHECK(row_apply(kr, m) == vec({0, 0}));

    // preimage of 2Z^2 under the identity is 2Z^2
    Lattice pre = preimage_lattice(IntMatrix::identity(2), Lattice::scaled(2, 2));
    CHECK(pre == Lattice::scaled(2, 2));
}

TEST_CASE("factor_integer and p_valuation") {
    auto f = factor_integer(Int(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Int, unsigned>{2, 3});
    CHECK(f[1] == std::pair<Int, unsigned>{3, 2});
    CHECK(f[2] == std::pair<Int, unsigned>{5, 1});
    CHECK(p_valuation(Int(48), Int(2)) == 4);
    CHECK(p_valuation(Int(7), Int(2)) == 0);
}
