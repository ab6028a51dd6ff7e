#pragma once

/* Degree formulas for purely inseparable towers of the diagonal shape
 * F_p(u_1^{p^{e_1}}, ..., u_r^{p^{e_r}}) inside F_p(u_1, ..., u_r):
 * the integral degree of the extension, element-wise inseparable degrees
 * from exponent supports, and the separable-times-inseparable composite. */

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "intdeg/errors.hpp"

namespace intdeg {

using Int = mpz_class;

struct InseparableTower {
    Int p;                           // prime
    std::vector<unsigned> exponents; // e_1 .. e_r, all >= 0, r >= 1
};

void validate_tower(const InseparableTower& t);
bool is_prime(const Int& n);

struct InsepDegrees {
    Int d;              // p^height = integral degree of the extension
    Int total;          // p^(sum of exponents) = field extension degree
    unsigned height = 0;
    unsigned exponent_sum = 0;
};

/// d = p^max(e_i): the p^h-th power map lands in K and the generator with
/// the largest exponent needs exactly that; total = p^sum(e_i); d | total.
InsepDegrees insep_degrees(const InseparableTower& t);

/* An element given by its support: exponent vectors a with 0 <= a_i <
 * p^{e_i}, coefficients abstract nonzero elements of the base field.
 * Distinct reduced exponents stay distinct under the Frobenius power map
 * and the coefficients stay nonzero, so no cancellation can lower the
 * degree below the support bound. */
struct TowerElementSupport {
    std::vector<std::vector<Int>> terms;
};

void validate_support(const InseparableTower& t, const TowerElementSupport& s);

/// p^s with s = max over terms and coordinates with a_i != 0 of
/// (e_i - v_p(a_i)); 1 for an empty or all-zero support.
Int element_insep_degree(const InseparableTower& t, const TowerElementSupport& s);

struct CompositeDegree {
    Int d;                    // separable degree * p^h
    std::optional<Int> total; // full degree s * p^e, when e is supplied
    bool sep_divides = false; // the separable degree divides d
};

/// d = s * p^h for separable degree s and inseparable height h; with the
/// exponent e >= h supplied, also reports total = s * p^e = d * p^{e-h}.
CompositeDegree composite_degree(const Int& s, const Int& p, unsigned h,
                                 std::optional<unsigned> e = std::nullopt);

struct SubmultDemo {
    Int d_K_M;
    Int stepwise_product;
    bool strict = false;
};

/* Two-step tower K = F_p(u1^{p^h1}, u2^{p^h2}) <= K(u1) <= F_p(u1, u2):
 * the one-shot degree is p^max(h1,h2) while the stepwise degrees multiply
 * to p^{h1+h2}; the inequality is strict as soon as both heights are
 * positive. Defaults reproduce the height-(1,1) case. */
SubmultDemo submultiplicativity_tower_demo(const Int& p, unsigned h1 = 1,
                                           unsigned h2 = 1);

} // namespace intdeg
