#include "intdeg/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "intdeg/catalog.hpp"

namespace intdeg {

namespace {

using Rng = std::mt19937_64;

long rand_in(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

IntVec random_vec(Rng& rng, std::size_t n, long lo, long hi) {
    IntVec v(n);
    for (auto& x : v) x = rand_in(rng, lo, hi);
    return v;
}

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rand_in(rng, lo, hi);
    return m;
}

std::string matrix_str(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << m.at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

struct Suite {
    SuiteResult res;

    explicit Suite(std::string name) { res.name = std::move(name); }
    void pass() { ++res.cases; }
    void fail(const std::string& note) {
        ++res.cases;
        ++res.failures;
        if (res.notes.size() < 10) res.notes.push_back(note);
    }
    void check(bool ok, const std::string& note) { ok ? pass() : fail(note); }
};

// --- exact linear algebra oracles ---------------------------------------

bool membership_oracle_holds(const Lattice& l, const IntVec& v) {
    bool member = lattice_contains(l, v);
    auto md = solve_min_denominator(l, v);
    if (!md) return false;  // full-rank lattice spans everything rationally
    if (member != (md->denom == 1)) return false;
    IntVec scaled(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) scaled[j] = md->denom * v[j];
    return lattice_contains(l, scaled);
}

// entry-wise shrink toward zero keeping the failure alive
std::string shrink_membership_case(IntMatrix m, IntVec v) {
    auto still_fails = [](const IntMatrix& mm, const IntVec& vv) {
        if (determinant(mm) == 0) return false;
        return !membership_oracle_holds(Lattice(vv.size(), mm), vv);
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < m.rows() && !progress; ++i)
            for (std::size_t j = 0; j < m.cols() && !progress; ++j) {
                if (m.at(i, j) == 0) continue;
                IntMatrix cand = m;
                cand.at(i, j) = 0;
                if (still_fails(cand, v)) {
                    m = cand;
                    progress = true;
                }
            }
        for (std::size_t j = 0; j < v.size() && !progress; ++j) {
            if (v[j] == 0) continue;
            IntVec cand = v;
            cand[j] = 0;
            if (still_fails(m, cand)) {
                v = cand;
                progress = true;
            }
        }
    }
    return "basis " + matrix_str(m) + " v " + vec_str(v);
}

SuiteResult suite_exactlin(unsigned long long seed, int cases) {
    Suite s("exactlin_oracles");
    Rng rng(seed ^ 0x1001);
    const int n_lattices = std::max(200, cases);
    for (int iter = 0; iter < n_lattices; ++iter) {
        std::size_t n = 1 + rand_in(rng, 0, 3);
        IntMatrix m = random_matrix(rng, n, n, -10, 10);
        if (determinant(m) == 0) {
            --iter;
            continue;
        }
        Lattice l(n, m);
        // membership oracle on one inside and one arbitrary vector
        IntVec inside = row_apply(random_vec(rng, n, -4, 4), l.basis());
        IntVec arbitrary = random_vec(rng, n, -10, 10);
        for (const IntVec& v : {inside, arbitrary}) {
            if (membership_oracle_holds(l, v)) s.pass();
            else s.fail("membership oracle: " + shrink_membership_case(m, v));
        }
        // HNF canonicity under a random unimodular left transform
        auto h1 = hnf(m);
        IntMatrix t = IntMatrix::identity(n);
        for (int k = 0; k < 4; ++k) {
            std::size_t i = rand_in(rng, 0, n - 1), j = rand_in(rng, 0, n - 1);
            if (i == j) continue;
            Int c(rand_in(rng, -2, 2));
            for (std::size_t col = 0; col < n; ++col) t.at(i, col) += c * t.at(j, col);
        }
        auto h2 = hnf(mat_mul(t, m));
        s.check(mat_mul(h1.U, m) == h1.H && h1.rank == n && h2.H == h1.H &&
                    abs(determinant(h1.U)) == 1,
                "hnf canonicity: " + matrix_str(m));
        // SNF chain and determinant product
        auto f = snf(m);
        bool snf_ok = mat_mul(mat_mul(f.U, m), f.V) == f.D &&
                      abs(determinant(f.U)) == 1 && abs(determinant(f.V)) == 1;
        Int prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            prod *= f.D.at(i, i);
            if (i + 1 < n && f.D.at(i, i) != 0)
                snf_ok = snf_ok && (f.D.at(i + 1, i + 1) % f.D.at(i, i) == 0);
        }
        snf_ok = snf_ok && (prod == abs(determinant(m)));
        s.check(snf_ok, "snf chain: " + matrix_str(m));
    }
    return s.res;
}

// --- order suites --------------------------------------------------------

struct OrderPair {
    const OrderAlgebra* o;
    SubringLattice a;
    long f;
};

std::vector<OrderPair> conductor_pairs(const std::vector<OrderAlgebra>& catalog) {
    std::vector<OrderPair> pairs;
    for (const OrderAlgebra& o : catalog)
        for (long f = 2; f <= 6; ++f)
            pairs.push_back(OrderPair{&o, subring_conductor_order(o, Int(f)), f});
    return pairs;
}

std::string pair_str(const OrderPair& p) {
    return p.o->basis_names.back() + "-algebra, f=" + std::to_string(p.f);
}

IntVec elem_add(const IntVec& x, const IntVec& y) {
    IntVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

SuiteResult suite_order_shift_cap(const std::vector<OrderPair>& pairs,
                                  unsigned long long seed, int cases) {
    Suite s("order_shift_invariance_and_cap");
    Rng rng(seed ^ 0x2002);
    const int per_pair = std::max(2, cases / 20);
    for (const OrderPair& p : pairs) {
        const OrderAlgebra& o = *p.o;
        for (int k = 0; k < per_pair; ++k) {
            IntVec b = random_vec(rng, o.rank, -6, 6);
            IntVec shift = row_apply(random_vec(rng, o.rank, -3, 3), p.a.lattice.basis());
            DegreeWitness w = integral_degree_element(o, p.a, b);
            DegreeWitness w2 = integral_degree_element(o, p.a, elem_add(b, shift));
            bool ok = (w.n == w2.n) && (w.n <= o.rank);
            for (const IntVec& c : w.coeffs) ok = ok && lattice_contains(p.a.lattice, c);
            s.check(ok, "shift/cap at " + pair_str(p) + " b=" + vec_str(b));
        }
    }
    return s.res;
}

SuiteResult suite_order_chain(const std::vector<OrderPair>& pairs) {
    Suite s("order_degree_chain_and_local_profile");
    for (const OrderPair& p : pairs) {
        const OrderAlgebra& o = *p.o;
        ExactDegree d = exact_degree(o, p.a);
        LocalDegreeProfile prof = local_degree_profile(o, p.a);
        Int index = lattice_index(p.a.lattice, Lattice::full(o.rank));
        bool ok = d.d >= 1 && d.d <= o.rank;
        ok = ok && ((d.d == 1) == (index == 1));
        for (const auto& [prime, dp] : prof.entries) {
            ok = ok && dp >= 1 && dp <= d.d && index % prime == 0;
        }
        ok = ok && prof.max_value() == d.d;
        ok = ok && integral_degree_element(o, p.a, d.witness).n == d.d;
        s.check(ok, "chain/profile at " + pair_str(p));
    }
    return s.res;
}

SuiteResult suite_order_monotonicity(const std::vector<OrderAlgebra>& catalog) {
    Suite s("order_monotonicity");
    for (const OrderAlgebra& o : catalog)
        for (long f = 2; f <= 3; ++f)
            for (long g = 2; g <= 3; ++g) {
                SubringLattice small = subring_conductor_order(o, Int(f * g));
                SubringLattice mid = subring_conductor_order(o, Int(f));
                bool ok = exact_degree(o, mid).d <= exact_degree(o, small).d;
                Int i_total = lattice_index(small.lattice, Lattice::full(o.rank));
                ok = ok && i_total == lattice_index(small.lattice, mid.lattice) *
                                          lattice_index(mid.lattice, Lattice::full(o.rank));
                s.check(ok, "monotonicity " + o.basis_names.back() + " f=" +
                                std::to_string(f) + " g=" + std::to_string(g));
            }
    return s.res;
}

SuiteResult suite_order_towers(const std::vector<OrderPair>& pairs,
                               unsigned long long seed, int cases, int& certified_count) {
    Suite s("order_tower_reports");
    Rng rng(seed ^ 0x3003);
    certified_count = 0;
    auto check_report = [&](const OrderAlgebra& o, const TowerReport& rep,
                            const std::string& what) {
        bool ok = rep.id_alpha >= rep.d_BC;
        ok = ok && rep.id_alpha <= o.rank * rep.d_BC;  // id <= mu-bound * id_B
        ok = ok && rep.d_AC_lower <= rep.d_AC_upper;
        ok = ok && rep.domains_bound_holds && rep.exponential_bound_holds;
        if (rep.d_AC_exact) {
            ok = ok && *rep.d_AC_exact <= rep.exponential_bound;
            if (rep.submultiplicative.has_value())
                ok = ok && (*rep.submultiplicative ==
                            (*rep.d_AC_exact <= rep.d_AB * rep.d_BC));
        }
        s.check(ok, what);
    };
    // the deterministic pipeline instance is always present
    {
        OrderAlgebra o = dedekind_cubic();
        SubringLattice a = dedekind_suborder(o);
        TowerReport rep = tower_report(o, a, dedekind_poly(), false);
        ++certified_count;
        check_report(o, rep, "dedekind pipeline");
    }
    const int attempts = std::max(2, cases / 12);
    for (const OrderPair& p : pairs) {
        const OrderAlgebra& o = *p.o;
        if (!o.assert_integrally_closed) continue;
        ExactDegree d = exact_degree(o, p.a);
        for (int k = 0; k < attempts; ++k) {
            MonicPoly poly;
            poly.coeffs.push_back(random_vec(rng, o.rank, -3, 3));
            poly.coeffs.push_back(random_vec(rng, o.rank, -3, 3));
            auto irr = quadratic_irreducibility(o, p.a, poly, d.d);
            if (irr.verdict == IrredVerdict::CertifiedIrreducible) {
                ++certified_count;
                TowerReport rep = tower_report(o, p.a, poly, true);
                check_report(o, rep, "certified tower at " + pair_str(p));
            } else {
                // q_search soundness still applies: any found cofactor
                // re-multiplied into A[T] (verified inside q_search)
                s.check(irr.found_k.has_value(), "unknown verdict without witness at " +
                                                     pair_str(p));
            }
        }
    }
    return s.res;
}

SuiteResult suite_order_semicontinuity(const std::vector<OrderAlgebra>& catalog) {
    Suite s("order_semicontinuity_cases");
    for (const OrderAlgebra& o : catalog) {
        // integrally closed instance A = B: the profile is constantly 1
        SubringLattice b = subring_full(o);
        LocalDegreeProfile prof = local_degree_profile(o, b);
        s.check(prof.entries.empty() && prof.generic_value == 1 &&
                    exact_degree(o, b).d == 1,
                "A = B profile at " + o.basis_names.back());
        if (o.rank != 2) continue;
        // simple instances: for rank 2 and A = Z + f*B, B = A[g] for the
        // second basis element g, so d and each d(p) equal the degree of g
        for (long f = 2; f <= 6; ++f) {
            SubringLattice a = subring_conductor_order(o, Int(f));
            IntVec gen{Int(0), Int(1)};
            unsigned idg = integral_degree_element(o, a, gen).n;
            bool ok = exact_degree(o, a).d == idg;
            for (const auto& [prime, dp] : local_degree_profile(o, a).entries)
                ok = ok && dp == local_integral_degree(o, a, gen, prime);
            s.check(ok, "simple-extension profile " + o.basis_names.back() + " f=" +
                            std::to_string(f));
        }
    }
    return s.res;
}

// --- semigroup suite ------------------------------------------------------

unsigned brute_monomial_degree(const NumericalSemigroup& s, unsigned long m) {
    if (m == 0) return 1;
    for (unsigned long i = 1;; ++i)
        if (s.contains(i * m)) return static_cast<unsigned>(i);
}

SuiteResult suite_semigroups(unsigned long long seed, int cases, int& numeric_trials) {
    Suite s("semigroup_degrees_and_certificates");
    Rng rng(seed ^ 0x4004);
    numeric_trials = 0;
    const int want = std::max(50, cases);
    int built = 0;
    // the worked pair comes first, deterministically
    std::vector<SemigroupExtension> exts;
    exts.emplace_back(NumericalSemigroup({3, 8, 10}), NumericalSemigroup({3, 4, 5}));
    while (built < want - 1) {
        std::vector<unsigned long> bg;
        for (int i = 0; i < 3; ++i) bg.push_back(rand_in(rng, 2, 12));
        unsigned long g = std::gcd(std::gcd(bg[0], bg[1]), bg[2]);
        if (g != 1) continue;
        NumericalSemigroup sb(bg);
        std::vector<unsigned long> ag;
        for (int i = 0; i < 3; ++i)
            ag.push_back(bg[0] * rand_in(rng, 1, 3) + bg[1] * rand_in(rng, 0, 2) +
                         bg[2] * rand_in(rng, 0, 2));
        unsigned long ga = ag[0];
        for (unsigned long x : ag) ga = std::gcd(ga, x);
        if (ga != 1) {
            bool fixed = false;
            for (unsigned long extra = 2; extra < 300 && !fixed; ++extra)
                if (sb.contains(extra) && std::gcd(ga, extra) == 1) {
                    ag.push_back(extra);
                    fixed = true;
                }
            if (!fixed) continue;
        }
        exts.emplace_back(NumericalSemigroup(ag), sb);
        ++built;
    }
    for (const SemigroupExtension& ext : exts) {
        bool ok = true;
        std::string why;
        unsigned long hi = 3 * static_cast<unsigned long>(std::max(0L, ext.A.frobenius())) + 5;
        for (unsigned long m = 0; m <= hi && ok; ++m)
            if (monomial_degree(ext.A, m) != brute_monomial_degree(ext.A, m)) {
                ok = false;
                why = "monomial degree mismatch at m=" + std::to_string(m);
            }
        // module_generators verifies Nakayama internally and throws on failure
        ModuleGenerators mg = module_generators(ext);
        DegreeBounds b = degree_bounds(ext);
        if (ok && (b.lower < 1 || b.lower > b.upper)) {
            ok = false;
            why = "bounds out of order";
        }
        if (ok && b.lower == 2) {
            unsigned long cap = static_cast<unsigned long>(ext.A.frobenius() + 1) +
                                ext.A.max_generator();
            auto cert = certificate_search(ext.A, mg.gens, 2, cap);
            if (cert) {
                if (!certificate_check(ext.A, mg.gens, *cert).valid) {
                    ok = false;
                    why = "searched certificate invalid";
                } else if (!certificate_numeric_check(ext.A, mg.gens, *cert, 100, rng)) {
                    ok = false;
                    why = "numeric re-verification failed";
                } else {
                    numeric_trials += 100;
                }
            }
        }
        std::ostringstream gens;
        for (unsigned long g : ext.A.generators()) gens << g << " ";
        s.check(ok, "semigroup pair A=<" + gens.str() + ">: " + why);
    }
    return s.res;
}

// --- field tower suite ----------------------------------------------------

using PolyFp = std::map<std::vector<unsigned long>, unsigned long>;

PolyFp fp_mul(const PolyFp& a, const PolyFp& b, unsigned long p) {
    PolyFp c;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<unsigned long> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            c[e] = (c[e] + ca * cb) % p;
        }
    for (auto it = c.begin(); it != c.end();)
        it = (it->second == 0) ? c.erase(it) : std::next(it);
    return c;
}

PolyFp fp_pow(const PolyFp& a, unsigned long n, unsigned long p, std::size_t nvars) {
    PolyFp acc{{std::vector<unsigned long>(nvars, 0), 1}};
    for (unsigned long i = 0; i < n; ++i) acc = fp_mul(acc, a, p);
    return acc;
}

bool fp_in_base(const PolyFp& a, const InseparableTower& t) {
    for (const auto& [e, c] : a) {
        (void)c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            unsigned long pe = 1;
            for (unsigned k = 0; k < t.exponents[i]; ++k) pe *= t.p.get_ui();
            if (e[i] % pe != 0) return false;
        }
    }
    return true;
}

SuiteResult suite_field_towers(unsigned long long seed, int cases) {
    Suite s("field_tower_degrees");
    Rng rng(seed ^ 0x5005);
    const int n = std::max(30, cases / 2);
    for (int iter = 0; iter < n; ++iter) {
        unsigned long p = (rand_in(rng, 0, 1) == 0) ? 2 : 3;
        std::vector<unsigned> e = {static_cast<unsigned>(rand_in(rng, 0, 2)),
                                   static_cast<unsigned>(rand_in(rng, 0, 2))};
        if (e[0] == 0 && e[1] == 0) e[0] = 1;
        InseparableTower t{Int(static_cast<long>(p)), e};
        InsepDegrees d = insep_degrees(t);
        bool ok = (d.total % d.d == 0);
        // the sup is attained at the generator with the largest exponent
        std::size_t argmax = (e[0] >= e[1]) ? 0 : 1;
        std::vector<Int> gen(2, Int(0));
        gen[argmax] = 1;
        if (e[argmax] > 0)
            ok = ok && element_insep_degree(t, TowerElementSupport{{gen}}) == d.d;
        // random support: element degree never exceeds the extension degree,
        // and the Frobenius expansion over F_p confirms it exactly
        std::vector<std::vector<Int>> terms;
        int nterms = rand_in(rng, 1, 3);
        for (int k = 0; k < nterms; ++k) {
            std::vector<Int> a;
            for (unsigned ei : e) {
                unsigned long bound = 1;
                for (unsigned j = 0; j < ei; ++j) bound *= p;
                a.push_back(Int(rand_in(rng, 0, static_cast<long>(bound - 1))));
            }
            if (std::find(terms.begin(), terms.end(), a) == terms.end())
                terms.push_back(a);
        }
        Int ed = element_insep_degree(t, TowerElementSupport{terms});
        ok = ok && ed <= d.d;
        PolyFp beta;
        for (const auto& a : terms) {
            std::vector<unsigned long> key(2);
            for (std::size_t i = 0; i < 2; ++i) {
                unsigned long pe = 1;
                for (unsigned j = 0; j < t.exponents[i]; ++j) pe *= p;
                key[i] = a[i].get_ui() + pe * rand_in(rng, 0, 1);
            }
            beta[key] = rand_in(rng, 1, static_cast<long>(p - 1));
        }
        unsigned long dl = ed.get_ui();
        ok = ok && fp_in_base(fp_pow(beta, dl, p, 2), t);
        if (dl > 1) ok = ok && !fp_in_base(fp_pow(beta, dl / p, p, 2), t);
        // stepwise split bound
        std::vector<unsigned> mid = {static_cast<unsigned>(rand_in(rng, 0, e[0])),
                                     static_cast<unsigned>(rand_in(rng, 0, e[1]))};
        Int step1 = insep_degrees(InseparableTower{t.p, {e[0] - mid[0], e[1] - mid[1]}}).d;
        Int step2 = insep_degrees(InseparableTower{t.p, mid}).d;
        ok = ok && d.d <= step1 * step2;
        std::ostringstream what;
        what << "tower p=" << p << " e=(" << e[0] << "," << e[1] << ")";
        s.check(ok, what.str());
    }
    return s.res;
}

} // namespace

bool HarnessReport::ok() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.failures == 0; });
}

int HarnessReport::total_cases() const {
    int n = 0;
    for (const SuiteResult& s : suites) n += s.cases;
    return n;
}

std::string HarnessReport::first_failure() const {
    for (const SuiteResult& s : suites)
        if (s.failures > 0)
            return s.name + ": " + (s.notes.empty() ? "(no note)" : s.notes.front());
    return {};
}

const SuiteResult* HarnessReport::suite(const std::string& name) const {
    for (const SuiteResult& s : suites)
        if (s.name == name) return &s;
    return nullptr;
}

HarnessReport run_harness(unsigned long long seed, int cases) {
    if (cases < 1) throw math_error("case count must be at least 1");
    HarnessReport rep;
    rep.seed = seed;
    rep.cases_requested = cases;
    std::vector<OrderAlgebra> catalog = harness_catalog();
    std::vector<OrderPair> pairs = conductor_pairs(catalog);
    rep.suites.push_back(suite_exactlin(seed, cases));
    rep.suites.push_back(suite_order_shift_cap(pairs, seed, cases));
    rep.suites.push_back(suite_order_chain(pairs));
    rep.suites.push_back(suite_order_monotonicity(catalog));
    rep.suites.push_back(suite_order_towers(pairs, seed, cases, rep.certified_towers));
    if (rep.certified_towers < 1) {
        rep.suites.back().failures += 1;
        rep.suites.back().notes.push_back("no certified tower instance was generated");
    }
    rep.suites.push_back(suite_order_semicontinuity(catalog));
    rep.suites.push_back(suite_semigroups(seed, cases, rep.numeric_substitutions));
    rep.suites.push_back(suite_field_towers(seed, cases));
    return rep;
}

ordered_json harness_to_json(const HarnessReport& rep) {
    ordered_json j;
    j["seed"] = rep.seed;
    j["cases_requested"] = rep.cases_requested;
    j["total_cases"] = rep.total_cases();
    j["certified_towers"] = rep.certified_towers;
    j["numeric_substitutions"] = rep.numeric_substitutions;
    j["ok"] = rep.ok();
    ordered_json suites = ordered_json::array();
    for (const SuiteResult& s : rep.suites) {
        ordered_json e;
        e["name"] = s.name;
        e["cases"] = s.cases;
        e["failures"] = s.failures;
        if (!s.notes.empty()) e["notes"] = s.notes;
        suites.push_back(std::move(e));
    }
    j["suites"] = std::move(suites);
    if (!rep.ok()) j["first_failure"] = rep.first_failure();
    return j;
}

} // namespace intdeg
