#pragma once

/* Exact polynomials in commuting abstract symbols (ranging over the
 * subring A = k[S_A]) and the variable t, used as degree certificates for
 * monomial subring extensions. A certificate for degree n supplies the
 * lower coefficients a_1..a_{n-1} of a monic equation for the generic
 * element x = sum_g c_g t^g; the residual -(x^n + sum a_i x^{n-i}) plays
 * the role of a_n, and validity means every surviving term of it (and of
 * every a_i) has its t-exponent in S_A. Distinct symbol monomials cannot
 * cancel for all substitutions, so the term test is sound and complete for
 * universal membership. */

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "intdeg/semigroups.hpp"

namespace intdeg {

using Int = mpz_class;

struct SymTerm {
    Int coeff;
    std::vector<unsigned> sym_exp;  // exponent per symbol, fixed width
    unsigned long t_exp = 0;
};

class SymbolicElement {
public:
    explicit SymbolicElement(std::size_t nsyms) : nsyms_(nsyms) {}

    static SymbolicElement zero(std::size_t nsyms) { return SymbolicElement(nsyms); }
    static SymbolicElement term(std::size_t nsyms, Int coeff,
                                std::vector<unsigned> sym_exp, unsigned long t_exp);
    /// the single symbol c_i
    static SymbolicElement symbol(std::size_t nsyms, std::size_t i);

    std::size_t symbol_count() const { return nsyms_; }
    const std::vector<SymTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SymbolicElement operator+(const SymbolicElement& o) const;
    SymbolicElement operator-(const SymbolicElement& o) const;
    SymbolicElement operator*(const SymbolicElement& o) const;
    SymbolicElement negate() const;
    SymbolicElement pow(unsigned n) const;

    /// Reduce coefficients mod p and drop the vanishing terms (p = 0: no-op).
    SymbolicElement reduce_mod(unsigned p) const;

    std::string to_string(const std::vector<unsigned long>& gen_labels) const;

private:
    std::size_t nsyms_;
    std::vector<SymTerm> terms_;  // canonical: sorted, merged, nonzero

    void canonicalize();
};

struct Certificate {
    unsigned n = 0;
    std::vector<SymbolicElement> lower_coeffs;  // a_1 .. a_{n-1}
};

struct FailingTerm {
    std::string where;  // "a_i" or "residual"
    SymTerm term;
};

struct CheckResult {
    bool valid = false;
    std::optional<FailingTerm> failing;
    SymbolicElement residual;  // the implied a_n

    CheckResult() : residual(0) {}
};

/* Validity check for a certificate over module generators gens (symbols
 * are indexed by the sorted generators). characteristic > 0 reduces the
 * coefficients mod p before the surviving-term test. Throws math_error on
 * malformed certificates (wrong symbol width or coefficient count). */
CheckResult certificate_check(const NumericalSemigroup& sa,
                              const std::vector<unsigned long>& gens,
                              const Certificate& cert, unsigned characteristic = 0);

/* Bounded ansatz search for a certificate of degree n: each a_i is sought
 * as an integer combination of (symbol monomials of degree i, i <= 2) times
 * t^e with e in S_A and e <= exponent_cap. The cancellation conditions on
 * the terms outside S_A form an integer linear system, solved exactly; a
 * hit always passes certificate_check. Absence of a hit proves nothing. */
std::optional<Certificate> certificate_search(const NumericalSemigroup& sa,
                                              const std::vector<unsigned long>& gens,
                                              unsigned n, unsigned long exponent_cap);

/* Numeric re-verification: substitute every symbol by a random concrete
 * polynomial supported on S_A, then confirm that the concrete x satisfies
 * a monic degree-n equation with all coefficients supported on S_A. */
bool certificate_numeric_check(const NumericalSemigroup& sa,
                               const std::vector<unsigned long>& gens,
                               const Certificate& cert, int trials,
                               std::mt19937_64& rng);

} // namespace intdeg
