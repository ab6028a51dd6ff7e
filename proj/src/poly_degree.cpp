#include "intdeg/poly_degree.hpp"

#include <algorithm>

namespace intdeg {

IntVec MonicPoly::coeff_desc(const OrderAlgebra& o, std::size_t i) const {
    if (i == 0) return o.unit;
    return coeffs.at(i - 1);
}

std::vector<IntVec> monic_mul_coeffs(const OrderAlgebra& o, const MonicPoly& p,
                                     const MonicPoly& q) {
    const std::size_t m = p.degree(), k = q.degree();
    std::vector<IntVec> out(m + k, IntVec(o.rank));
    for (std::size_t s = 1; s <= m + k; ++s) {
        IntVec acc(o.rank);
        for (std::size_t i = 0; i <= std::min(s, m); ++i) {
            std::size_t j = s - i;
            if (j > k) continue;
            IntVec term = elem_mul(o, p.coeff_desc(o, i), q.coeff_desc(o, j));
            for (std::size_t c = 0; c < o.rank; ++c) acc[c] += term[c];
        }
        out[s - 1] = std::move(acc);
    }
    return out;
}

bool poly_coeffs_in(const OrderAlgebra& o, const SubringLattice& a, const MonicPoly& p) {
    (void)o;
    return std::all_of(p.coeffs.begin(), p.coeffs.end(), [&](const IntVec& c) {
        return lattice_contains(a.lattice, c);
    });
}

std::optional<MonicPoly> q_search(const OrderAlgebra& o, const SubringLattice& a,
                                  const MonicPoly& p, unsigned k) {
    const std::size_t r = o.rank;
    const std::size_t m = p.degree();
    if (k == 0) {
        if (poly_coeffs_in(o, a, p)) return MonicPoly{};
        return std::nullopt;
    }
    // unknowns: the k coefficient vectors of q; conditions: each of the
    // m+k non-leading product coefficients lies in the A-lattice
    const std::size_t ncond = m + k;
    IntMatrix n(ncond * r, k * r);
    IntVec t(ncond * r);
    for (std::size_t s = 1; s <= ncond; ++s) {
        if (s <= m) {
            const IntVec& ps = p.coeffs[s - 1];
            for (std::size_t c = 0; c < r; ++c) t[(s - 1) * r + c] = ps[c];
        }
        for (std::size_t j = 1; j <= std::min<std::size_t>(s, k); ++j) {
            std::size_t i = s - j;
            if (i > m) continue;
            // contribution p_i * q_j: column-convention multiplication matrix
            IntMatrix mult = transpose(mult_matrix(o, p.coeff_desc(o, i)));
            for (std::size_t row = 0; row < r; ++row)
                for (std::size_t col = 0; col < r; ++col)
                    n.at((s - 1) * r + row, (j - 1) * r + col) += mult.at(row, col);
        }
    }
    // block-diagonal target lattice: one copy of A per product coefficient
    IntMatrix block(ncond * r, ncond * r);
    for (std::size_t b = 0; b < ncond; ++b)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                block.at(b * r + i, b * r + j) = a.lattice.basis().at(i, j);
    Lattice target(ncond * r, block);
    auto sol = solve_congruence_system(n, t, target);
    if (!sol) return std::nullopt;
    MonicPoly q;
    for (std::size_t j = 0; j < k; ++j) {
        IntVec cj(r);
        for (std::size_t c = 0; c < r; ++c) cj[c] = (*sol)[j * r + c];
        q.coeffs.push_back(std::move(cj));
    }
    // soundness: re-multiply and membership-test every coefficient
    for (const IntVec& c : monic_mul_coeffs(o, p, q))
        if (!lattice_contains(a.lattice, c))
            throw internal_error("q_search produced an invalid cofactor");
    return q;
}

IrreducibilityResult quadratic_irreducibility(const OrderAlgebra& o,
                                              const SubringLattice& a,
                                              const MonicPoly& p, unsigned d_ab) {
    if (p.degree() != 2)
        throw math_error("irreducibility certificate only covers quadratics");
    if (!o.assert_integrally_closed)
        throw math_error("irreducibility certificate needs the integrally_closed "
                         "assertion on the algebra");
    if (d_ab < 1) throw math_error("d_AB must be at least 1");
    IrreducibilityResult res;
    res.max_k_checked = 2 * (d_ab - 1);
    for (unsigned k = 0; k <= res.max_k_checked; ++k)
        if (q_search(o, a, p, k)) {
            res.verdict = IrredVerdict::Unknown;
            res.found_k = k;
            return res;
        }
    res.verdict = IrredVerdict::CertifiedIrreducible;
    return res;
}

RootDegree integral_degree_root(const OrderAlgebra& o, const SubringLattice& a,
                                const MonicPoly& p, bool irreducible_asserted) {
    if (!o.assert_integrally_closed)
        throw math_error("root degree needs the integrally_closed assertion");
    if (!irreducible_asserted)
        throw math_error("root degree needs p irreducible (certified or asserted)");
    const unsigned m = static_cast<unsigned>(p.degree());
    const unsigned cap = (static_cast<unsigned>(o.rank) - 1) * m;
    for (unsigned k = 0; k <= cap; ++k)
        if (auto q = q_search(o, a, p, k)) return RootDegree{m + k, k, std::move(*q)};
    throw math_error("no cofactor up to the rank bound: the irreducibility or "
                     "integral-closedness assertion must be wrong");
}

TowerReport tower_report(const OrderAlgebra& o, const SubringLattice& a,
                         const MonicPoly& p, bool irreducible_asserted) {
    TowerReport rep;
    rep.irreducibility_asserted = irreducible_asserted;
    if (!irreducible_asserted) {
        ExactDegree d = exact_degree(o, a);
        auto cert = quadratic_irreducibility(o, a, p, d.d);
        if (cert.verdict != IrredVerdict::CertifiedIrreducible)
            throw math_error("irreducibility of p could not be certified; rerun with "
                             "the irreducibility assertion if p is known irreducible");
        rep.d_AB = d.d;
    } else {
        rep.d_AB = exact_degree(o, a).d;
    }
    const unsigned r = static_cast<unsigned>(o.rank);
    const unsigned m = static_cast<unsigned>(p.degree());
    RootDegree rd = integral_degree_root(o, a, p, true);
    rep.d_BC = m;
    rep.id_alpha = rd.n;
    rep.k_min = rd.k_min;

    Int index = lattice_index(a.lattice, Lattice::full(o.rank));
    rep.mu_AB_upper = (index < r) ? static_cast<unsigned>(index.get_ui()) : r;
    rep.mu_AB_lower = std::max(rep.d_AB, (rep.id_alpha + m - 1) / m);
    if (rep.mu_AB_lower == rep.mu_AB_upper) rep.mu_AB_exact = rep.mu_AB_lower;

    rep.d_AC_lower = std::max(rep.id_alpha, rep.d_AB);
    rep.d_AC_upper = rep.mu_AB_upper * m;
    if (rep.d_AC_lower == rep.d_AC_upper) rep.d_AC_exact = rep.d_AC_lower;

    const unsigned product = rep.d_AB * rep.d_BC;
    if (rep.d_AC_exact) rep.submultiplicative = (*rep.d_AC_exact <= product);
    else if (rep.d_AC_lower > product) rep.submultiplicative = false;
    else if (rep.d_AC_upper <= product) rep.submultiplicative = true;

    // with B integrally closed and Q(A) = Q(B), B is the integral closure
    // of A, so the closure bound reads mu_AB * d_AB * d_BC
    const unsigned mu = rep.mu_AB_exact ? *rep.mu_AB_exact : rep.mu_AB_upper;
    rep.domains_bound = Int(mu) * rep.d_AB * rep.d_BC;
    rep.domains_bound_holds = (Int(rep.d_AC_lower) <= rep.domains_bound) &&
                              (!rep.d_AC_exact || Int(*rep.d_AC_exact) <= rep.domains_bound);

    Int expo;
    mpz_ui_pow_ui(expo.get_mpz_t(), rep.d_AB, rep.d_BC);
    rep.exponential_bound = expo * rep.d_BC;
    rep.exponential_bound_holds =
        (Int(rep.id_alpha) <= rep.exponential_bound) &&
        (!rep.d_AC_exact || Int(*rep.d_AC_exact) <= rep.exponential_bound);
    return rep;
}

} // namespace intdeg
