#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "intdeg/semigroups.hpp"
#include "intdeg/symbolic.hpp"

using namespace intdeg;

namespace {

SemigroupExtension dlmu() {
    return SemigroupExtension(NumericalSemigroup({3, 8, 10}), NumericalSemigroup({3, 4, 5}));
}

// brute-force oracle: minimal i with i*m in S, by direct scan
unsigned brute_monomial_degree(const NumericalSemigroup& s, unsigned long m) {
    if (m == 0) return 1;
    for (unsigned long i = 1;; ++i)
        if (s.contains(i * m)) return static_cast<unsigned>(i);
}

} // namespace

TEST_CASE("frobenius numbers") {
    NumericalSemigroup s({3, 8, 10});
    CHECK(s.frobenius() == 7);
    // gaps of <3,8,10> are exactly {1,2,4,5,7}
    std::vector<unsigned long> gaps;
    for (unsigned long m = 0; m <= 30; ++m)
        if (!s.contains(m)) gaps.push_back(m);
    CHECK(gaps == std::vector<unsigned long>{1, 2, 4, 5, 7});

    CHECK(NumericalSemigroup({1}).frobenius() == -1);
    CHECK(NumericalSemigroup({3, 4, 5}).frobenius() == 2);
    CHECK(NumericalSemigroup({2, 3}).frobenius() == 1);
    CHECK(NumericalSemigroup({6, 10, 15}).frobenius() == 29);
}

TEST_CASE("rejects bad generators") {
    CHECK_THROWS_AS(NumericalSemigroup({}), math_error);
    CHECK_THROWS_AS(NumericalSemigroup({0, 3}), math_error);
    CHECK_THROWS_WITH_AS(NumericalSemigroup({2, 4}), doctest::Contains("divide"),
                         math_error);
}

TEST_CASE("monomial degrees") {
    NumericalSemigroup sa({3, 8, 10});
    CHECK(monomial_degree(sa, 4) == 2);  // 4 not in S, 8 in S
    CHECK(monomial_degree(sa, 3) == 1);
    CHECK(monomial_degree(sa, 0) == 1);
    CHECK(monomial_degree(NumericalSemigroup({2, 3}), 1) == 2);
}

TEST_CASE("module generators via graded Nakayama") {
    ModuleGenerators mg = module_generators(dlmu());
    CHECK(mg.mu() == 3);
    CHECK(mg.gens == std::vector<unsigned long>{0, 4, 5});

    NumericalSemigroup s({3, 4, 5});
    ModuleGenerators trivial = module_generators(SemigroupExtension(s, s));
    CHECK(trivial.mu() == 1);
    CHECK(trivial.gens == std::vector<unsigned long>{0});

    ModuleGenerators mg2 = module_generators(
        SemigroupExtension(NumericalSemigroup({2, 7}), NumericalSemigroup({2, 3})));
    CHECK(mg2.mu() == 2);
    CHECK(mg2.gens == std::vector<unsigned long>{0, 3});
}

TEST_CASE("degree bounds") {
    DegreeBounds b = degree_bounds(dlmu());
    CHECK(b.lower == 2);
    CHECK(b.upper == 3);

    NumericalSemigroup s({3, 4, 5});
    DegreeBounds eq = degree_bounds(SemigroupExtension(s, s));
    CHECK(eq.lower == 1);
    CHECK(eq.upper == 1);

    DegreeBounds closed = degree_bounds(
        SemigroupExtension(NumericalSemigroup({2, 3}), NumericalSemigroup({1})));
    CHECK(closed.lower == 2);
    CHECK(closed.upper == 2);  // hence d = 2 exactly
}

TEST_CASE("the certificate (2, [-2a]) of the running example is valid") {
    SemigroupExtension ext = dlmu();
    ModuleGenerators mg = module_generators(ext);
    Certificate cert;
    cert.n = 2;
    // a_1 = -2*c0 where c0 is the coefficient of the generator 0
    cert.lower_coeffs.push_back(
        SymbolicElement::term(mg.gens.size(), Int(-2), {1, 0, 0}, 0));
    CheckResult res = certificate_check(ext.A, mg.gens, cert);
    CHECK(res.valid);
    // residual support: t-exponents {0, 8, 9, 10}, all inside <3,8,10>
    std::vector<unsigned long> texps;
    for (const SymTerm& t : res.residual.terms()) texps.push_back(t.t_exp);
    std::sort(texps.begin(), texps.end());
    CHECK(texps == std::vector<unsigned long>{0, 8, 9, 10});
}

TEST_CASE("certificate of degree 1 fails for a proper extension") {
    SemigroupExtension ext = dlmu();
    ModuleGenerators mg = module_generators(ext);
    Certificate cert;
    cert.n = 1;
    CheckResult res = certificate_check(ext.A, mg.gens, cert);
    CHECK_FALSE(res.valid);
    REQUIRE(res.failing.has_value());
    CHECK(res.failing->where == "residual");
    CHECK(res.failing->term.t_exp == 4);  // the term c4*t^4 survives
}

TEST_CASE("certificate check on <2,3> inside N") {
    SemigroupExtension ext(NumericalSemigroup({2, 3}), NumericalSemigroup({1}));
    ModuleGenerators mg = module_generators(ext);
    REQUIRE(mg.gens == std::vector<unsigned long>{0, 1});
    Certificate cert;
    cert.n = 2;
    cert.lower_coeffs.push_back(SymbolicElement::term(2, Int(-2), {1, 0}, 0));
    CheckResult res = certificate_check(ext.A, mg.gens, cert);
    CHECK(res.valid);
    // residual is -a^2 + b^2 t^2 up to sign: two terms
    CHECK(res.residual.terms().size() == 2);
}

TEST_CASE("malformed certificates are rejected") {
    SemigroupExtension ext = dlmu();
    ModuleGenerators mg = module_generators(ext);
    Certificate bad;
    bad.n = 3;  // but only 1 lower coefficient supplied
    bad.lower_coeffs.push_back(SymbolicElement::zero(mg.gens.size()));
    CHECK_THROWS_AS(certificate_check(ext.A, mg.gens, bad), math_error);
    Certificate wrong_width;
    wrong_width.n = 2;
    wrong_width.lower_coeffs.push_back(SymbolicElement::zero(2));
    CHECK_THROWS_AS(certificate_check(ext.A, mg.gens, wrong_width), math_error);
}

TEST_CASE("certificate search finds the quadratic-shift identities") {
    SemigroupExtension ext = dlmu();
    ModuleGenerators mg = module_generators(ext);
    auto cert = certificate_search(ext.A, mg.gens, 2, 10);
    REQUIRE(cert.has_value());
    CHECK(certificate_check(ext.A, mg.gens, *cert).valid);
    std::mt19937_64 rng(424242);
    CHECK(certificate_numeric_check(ext.A, mg.gens, *cert, 100, rng));

    SemigroupExtension ext2(NumericalSemigroup({2, 3}), NumericalSemigroup({1}));
    ModuleGenerators mg2 = module_generators(ext2);
    auto cert2 = certificate_search(ext2.A, mg2.gens, 2, 8);
    REQUIRE(cert2.has_value());
    CHECK(certificate_check(ext2.A, mg2.gens, *cert2).valid);

    // n = 1 never works for a proper extension
    CHECK_FALSE(certificate_search(ext.A, mg.gens, 1, 10).has_value());
}

TEST_CASE("property: monomial degree equals brute force") {
    for (auto gens : {std::vector<unsigned long>{3, 8, 10}, {3, 4, 5}, {2, 7}, {5, 7, 11},
                      {6, 10, 15}}) {
        NumericalSemigroup s(gens);
        unsigned long hi = 3 * static_cast<unsigned long>(std::max(0L, s.frobenius())) + 5;
        for (unsigned long m = 0; m <= hi; ++m)
            CHECK(monomial_degree(s, m) == brute_monomial_degree(s, m));
    }
}

TEST_CASE("property: random extensions have ordered bounds and sound generators") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<unsigned long> pick(2, 12);
    int built = 0;
    while (built < 40) {
        std::vector<unsigned long> bg = {pick(rng), pick(rng), pick(rng)};
        unsigned long g = std::gcd(std::gcd(bg[0], bg[1]), bg[2]);
        if (g != 1) continue;
        NumericalSemigroup sb(bg);
        // subring generators: random members of S_B, forced to gcd 1
        std::vector<unsigned long> ag;
        std::uniform_int_distribution<int> mix(1, 3);
        for (int i = 0; i < 3; ++i)
            ag.push_back(bg[0] * mix(rng) + bg[1] * mix(rng) + bg[2] * mix(rng));
        unsigned long ga = std::gcd(std::gcd(ag[0], ag[1]), ag[2]);
        if (ga != 1) {
            // adjoin a coprime member of S_B
            bool fixed = false;
            for (unsigned long extra = 2; extra < 200 && !fixed; ++extra)
                if (sb.contains(extra) && std::gcd(ga, extra) == 1) {
                    ag.push_back(extra);
                    fixed = true;
                }
            if (!fixed) continue;
        }
        SemigroupExtension ext{NumericalSemigroup(ag), sb};
        ++built;
        DegreeBounds b = degree_bounds(ext);
        CHECK(b.lower >= 1);
        CHECK(b.lower <= b.upper);
        // module_generators verifies Nakayama soundness internally
        ModuleGenerators mg = module_generators(ext);
        CHECK(mg.gens.front() == 0);
    }
}
