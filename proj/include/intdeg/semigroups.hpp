#pragma once

/* Numerical semigroups and the integral degree machinery for monomial
 * subrings k[S_A] <= k[S_B] of k[t]: membership, Frobenius numbers,
 * monomial degrees, and minimal module generators via graded Nakayama. */

#include <vector>

#include "intdeg/errors.hpp"

namespace intdeg {

class NumericalSemigroup {
public:
    /// Requires nonempty positive generators with gcd 1; otherwise throws
    /// math_error (for gcd g > 1, with the hint to divide the generators by g).
    explicit NumericalSemigroup(std::vector<unsigned long> generators);

    const std::vector<unsigned long>& generators() const { return gens_; }
    /// Largest integer not in the semigroup; -1 when the semigroup is all of N.
    long frobenius() const { return frobenius_; }
    bool contains(unsigned long m) const;
    unsigned long min_generator() const { return gens_.front(); }
    unsigned long max_generator() const { return gens_.back(); }

private:
    std::vector<unsigned long> gens_;
    long frobenius_;
    std::vector<bool> member_;  // up to frobenius + max generator
};

/* Minimal i >= 1 with i*m in S_A; this is the integral degree of t^m over
 * k[S_A]: a single term a_i = -t^{i*m} realizes a monic equation, and
 * conversely the top term t^{n*m} of any monic relation must be matched by
 * some a_i t^{(n-i)m} with a_i supported on i*m in S_A. Bounded by
 * frobenius + 1. */
unsigned monomial_degree(const NumericalSemigroup& sa, unsigned long m);

struct SemigroupExtension {
    NumericalSemigroup A;
    NumericalSemigroup B;

    /// Validates that every generator of A lies in B (so k[S_A] <= k[S_B]).
    SemigroupExtension(NumericalSemigroup a, NumericalSemigroup b);
};

struct ModuleGenerators {
    std::vector<unsigned long> gens;  // sorted; always starts with 0
    std::size_t mu() const { return gens.size(); }
};

/* Minimal A-module generators of B = k[S_B] over A = k[S_A] by graded
 * Nakayama: the exponents s in S_B that do not decompose as a nonzero
 * S_A-element plus an S_B-element. All of them lie at or below
 * frobenius(S_B) + min nonzero generator of S_A; Nakayama soundness is
 * verified on construction. */
ModuleGenerators module_generators(const SemigroupExtension& ext);

struct DegreeBounds {
    unsigned lower = 1;  // best monomial witness
    unsigned upper = 1;  // mu
};

/// lower = max monomial degree over S_B-exponents at or below frobenius(S_A)
/// (larger exponents lie in S_A and have degree 1); upper = mu.
DegreeBounds degree_bounds(const SemigroupExtension& ext);

} // namespace intdeg
