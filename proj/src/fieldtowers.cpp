#include "intdeg/fieldtowers.hpp"

#include <algorithm>
#include <numeric>

#include "intdeg/exactlin.hpp"

namespace intdeg {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

void validate_tower(const InseparableTower& t) {
    if (!is_prime(t.p)) throw math_error("tower characteristic must be prime");
    if (t.exponents.empty()) throw math_error("tower needs at least one variable");
}

InsepDegrees insep_degrees(const InseparableTower& t) {
    validate_tower(t);
    InsepDegrees out;
    out.height = *std::max_element(t.exponents.begin(), t.exponents.end());
    out.exponent_sum = std::accumulate(t.exponents.begin(), t.exponents.end(), 0u);
    mpz_pow_ui(out.d.get_mpz_t(), t.p.get_mpz_t(), out.height);
    mpz_pow_ui(out.total.get_mpz_t(), t.p.get_mpz_t(), out.exponent_sum);
    if (out.total % out.d != 0) throw internal_error("degree does not divide total");
    return out;
}

void validate_support(const InseparableTower& t, const TowerElementSupport& s) {
    validate_tower(t);
    const std::size_t r = t.exponents.size();
    for (const auto& a : s.terms) {
        if (a.size() != r) throw math_error("support term has wrong length");
        for (std::size_t i = 0; i < r; ++i) {
            Int bound;
            mpz_pow_ui(bound.get_mpz_t(), t.p.get_mpz_t(), t.exponents[i]);
            if (a[i] < 0 || a[i] >= bound)
                throw math_error("support exponent out of range [0, p^e)");
        }
    }
    for (std::size_t i = 0; i < s.terms.size(); ++i)
        for (std::size_t j = i + 1; j < s.terms.size(); ++j)
            if (s.terms[i] == s.terms[j]) throw math_error("support terms must be distinct");
}

Int element_insep_degree(const InseparableTower& t, const TowerElementSupport& s) {
    validate_support(t, s);
    unsigned smax = 0;
    for (const auto& a : s.terms)
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            unsigned long v = p_valuation(a[i], t.p);
            // a_i < p^{e_i} and a_i != 0 force v < e_i
            smax = std::max<unsigned>(smax, t.exponents[i] - static_cast<unsigned>(v));
        }
    Int out;
    mpz_pow_ui(out.get_mpz_t(), t.p.get_mpz_t(), smax);
    return out;
}

CompositeDegree composite_degree(const Int& s, const Int& p, unsigned h,
                                 std::optional<unsigned> e) {
    if (s < 1) throw math_error("separable degree must be at least 1");
    if (h > 0 && !is_prime(p)) throw math_error("characteristic must be prime");
    if (e && *e < h) throw math_error("exponent must be at least the height");
    CompositeDegree out;
    Int ph;
    mpz_pow_ui(ph.get_mpz_t(), p.get_mpz_t(), h);
    out.d = s * ph;
    out.sep_divides = (out.d % s == 0);
    if (e) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), *e);
        out.total = s * pe;
        Int peh;
        mpz_pow_ui(peh.get_mpz_t(), p.get_mpz_t(), *e - h);
        if (*out.total != out.d * peh)
            throw internal_error("total degree factorization failed");
    }
    return out;
}

SubmultDemo submultiplicativity_tower_demo(const Int& p, unsigned h1, unsigned h2) {
    InseparableTower full{p, {h1, h2}};
    validate_tower(full);
    SubmultDemo out;
    out.d_K_M = insep_degrees(full).d;
    // step degrees: adjoin u1 first, then u2
    Int step1 = insep_degrees(InseparableTower{p, {h1, 0}}).d;
    Int step2 = insep_degrees(InseparableTower{p, {0, h2}}).d;
    out.stepwise_product = step1 * step2;
    out.strict = out.d_K_M < out.stepwise_product;
    if (out.d_K_M > out.stepwise_product)
        throw internal_error("submultiplicativity direction violated");
    return out;
}

} // namespace intdeg
