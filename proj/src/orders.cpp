#include "intdeg/orders.hpp"

#include <algorithm>
#include <sstream>

namespace intdeg {

namespace {

std::string triple_str(std::size_t i, std::size_t j, std::size_t l) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << l << ")";
    return os.str();
}

IntVec basis_vec(std::size_t r, std::size_t i) {
    IntVec v(r);
    v[i] = 1;
    return v;
}

} // namespace

IntVec elem_mul(const OrderAlgebra& o, const IntVec& x, const IntVec& y) {
    const std::size_t r = o.rank;
    if (x.size() != r || y.size() != r) throw math_error("element has wrong length");
    IntVec out(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (y[j] == 0) continue;
            Int c = x[i] * y[j];
            const IntVec& tij = o.table[i][j];
            for (std::size_t k = 0; k < r; ++k) out[k] += c * tij[k];
        }
    }
    return out;
}

IntVec elem_pow(const OrderAlgebra& o, const IntVec& x, unsigned n) {
    IntVec acc = o.unit;
    for (unsigned i = 0; i < n; ++i) acc = elem_mul(o, acc, x);
    return acc;
}

bool elem_is_zero(const IntVec& x) {
    return std::all_of(x.begin(), x.end(), [](const Int& c) { return c == 0; });
}

IntMatrix mult_matrix(const OrderAlgebra& o, const IntVec& x) {
    const std::size_t r = o.rank;
    IntMatrix m(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        IntVec prod = elem_mul(o, x, basis_vec(r, j));
        for (std::size_t k = 0; k < r; ++k) m.at(j, k) = prod[k];
    }
    return m;
}

std::vector<Int> char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw internal_error("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    // Faddeev-LeVerrier: M_1 = M, c_{n-k} = -tr(M_k)/k, M_{k+1} = M(M_k + c_{n-k} I)
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        if (tr % Int(k) != 0) throw internal_error("char_poly: inexact division");
        c[n - k] = -tr / Int(k);
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c[n - k];
        mk = mat_mul(m, mk);
    }
    return c;
}

void validate_algebra(const OrderAlgebra& o) {
    const std::size_t r = o.rank;
    if (r == 0) throw math_error("algebra rank must be positive");
    if (o.unit.size() != r) throw math_error("unit vector has wrong length");
    if (o.table.size() != r) throw math_error("structure table has wrong shape");
    for (std::size_t i = 0; i < r; ++i) {
        if (o.table[i].size() != r) throw math_error("structure table has wrong shape");
        for (std::size_t j = 0; j < r; ++j)
            if (o.table[i][j].size() != r)
                throw math_error("structure table has wrong shape");
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (o.table[i][j] != o.table[j][i])
                throw math_error("commutativity violated at pair (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
    for (std::size_t j = 0; j < r; ++j)
        if (elem_mul(o, o.unit, basis_vec(r, j)) != basis_vec(r, j))
            throw math_error("unit does not act as identity on basis element " +
                             std::to_string(j));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t l = 0; l < r; ++l) {
                IntVec lhs = elem_mul(o, o.table[i][j], basis_vec(r, l));
                IntVec rhs = elem_mul(o, basis_vec(r, i), o.table[j][l]);
                if (lhs != rhs)
                    throw math_error("associativity violated at triple " +
                                     triple_str(i, j, l));
            }
    // domain assumption spot-check: multiplication by these nonzero samples
    // must be injective, i.e. have nonsingular matrix
    std::vector<IntVec> samples;
    for (std::size_t i = 0; i < r; ++i) samples.push_back(basis_vec(r, i));
    for (std::size_t i = 0; i + 1 < r; ++i) {
        IntVec v(r);
        v[i] = 1;
        v[i + 1] = 1;
        samples.push_back(v);
    }
    IntVec all_ones(r, 1);
    samples.push_back(all_ones);
    for (const IntVec& s : samples)
        if (determinant(mult_matrix(o, s)) == 0)
            throw math_error("zero divisor found: multiplication by a nonzero sample "
                             "element is singular (not a domain)");
}

SubringLattice make_subring(const OrderAlgebra& o, const IntMatrix& basis_rows) {
    Lattice l(o.rank, basis_rows);
    if (!lattice_contains(l, o.unit))
        throw math_error("subring lattice does not contain the unit");
    if (l.rank() != o.rank) {
        // the only admissible non-full-rank subring is Z*1
        Lattice z1(o.rank, IntMatrix::from_rows({o.unit}, o.rank));
        if (l != z1)
            throw math_error("subring lattice must be full rank or exactly Z*1");
    }
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = i; j < l.rank(); ++j) {
            IntVec prod = elem_mul(o, l.basis().row(i), l.basis().row(j));
            if (!lattice_contains(l, prod))
                throw math_error("lattice is not closed under multiplication "
                                 "(basis rows " + std::to_string(i) + " and " +
                                 std::to_string(j) + ")");
        }
    return SubringLattice{&o, std::move(l)};
}

SubringLattice subring_unit_z(const OrderAlgebra& o) {
    return make_subring(o, IntMatrix::from_rows({o.unit}, o.rank));
}

SubringLattice subring_conductor_order(const OrderAlgebra& o, const Int& f) {
    if (f <= 0) throw math_error("conductor order parameter must be positive");
    std::vector<IntVec> rows;
    rows.push_back(o.unit);
    for (std::size_t i = 0; i < o.rank; ++i) {
        IntVec v(o.rank);
        v[i] = f;
        rows.push_back(v);
    }
    return make_subring(o, IntMatrix::from_rows(rows, o.rank));
}

SubringLattice subring_full(const OrderAlgebra& o) {
    return make_subring(o, IntMatrix::identity(o.rank));
}

Lattice power_module(const OrderAlgebra& o, const SubringLattice& a, const IntVec& b,
                     unsigned n) {
    std::vector<IntVec> rows;
    IntVec pw = o.unit;
    for (unsigned i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < a.lattice.rank(); ++j)
            rows.push_back(elem_mul(o, a.lattice.basis().row(j), pw));
        pw = elem_mul(o, pw, b);
    }
    return Lattice::span_of(o.rank, rows);
}

DegreeWitness integral_degree_element(const OrderAlgebra& o, const SubringLattice& a,
                                      const IntVec& b) {
    const std::size_t r = o.rank;
    const std::size_t k = a.lattice.rank();
    std::vector<IntVec> powers{o.unit};
    for (std::size_t i = 1; i <= r; ++i)
        powers.push_back(elem_mul(o, powers.back(), b));
    for (unsigned n = 1; n <= r; ++n) {
        // unknowns: coordinates of a_1..a_n in the A-basis;
        // equation: sum_i a_i * b^{n-i} = -b^n
        IntMatrix sys(r, k * n);
        for (unsigned i = 1; i <= n; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                IntVec col = elem_mul(o, a.lattice.basis().row(j), powers[n - i]);
                for (std::size_t row = 0; row < r; ++row)
                    sys.at(row, (i - 1) * k + j) = col[row];
            }
        IntVec rhs(r);
        for (std::size_t row = 0; row < r; ++row) rhs[row] = -powers[n][row];
        auto sol = solve_linear(sys, rhs);
        if (!sol) continue;
        std::vector<IntVec> coeffs;
        for (unsigned i = 1; i <= n; ++i) {
            IntVec ai(r);
            for (std::size_t j = 0; j < k; ++j) {
                const Int& c = (*sol)[(i - 1) * k + j];
                if (c == 0) continue;
                for (std::size_t col = 0; col < r; ++col)
                    ai[col] += c * a.lattice.basis().at(j, col);
            }
            coeffs.push_back(std::move(ai));
        }
        // the witness must re-evaluate to exactly zero
        IntVec acc = powers[n];
        for (unsigned i = 1; i <= n; ++i) {
            IntVec term = elem_mul(o, coeffs[i - 1], powers[n - i]);
            for (std::size_t col = 0; col < r; ++col) acc[col] += term[col];
        }
        if (!elem_is_zero(acc)) throw internal_error("degree witness does not vanish");
        return DegreeWitness{n, std::move(coeffs)};
    }
    throw internal_error("integral degree exceeded the rank cap");
}

unsigned local_integral_degree(const OrderAlgebra& o, const SubringLattice& a,
                               const IntVec& b, const Int& p) {
    for (unsigned n = 1; n <= o.rank; ++n) {
        Lattice mn = power_module(o, a, b, n);
        auto md = solve_min_denominator(mn, elem_pow(o, b, n));
        if (md && p_valuation(md->denom, p) == 0) return n;
    }
    throw internal_error("local integral degree exceeded the rank cap");
}

ExactDegree exact_degree(const OrderAlgebra& o, const SubringLattice& a) {
    if (!a.lattice.full_rank())
        throw math_error("exact degree requires a finite-index subring");
    auto reps = coset_representatives(a.lattice, Lattice::full(o.rank));
    ExactDegree best;
    for (const IntVec& rep : reps) {
        unsigned n = integral_degree_element(o, a, rep).n;
        if (n > best.d) {
            best.d = n;
            best.witness = rep;
        }
    }
    return best;
}

unsigned degree_over_Z(const OrderAlgebra& o) {
    if (!o.assert_fraction_field_is_field)
        throw math_error("degree over Z needs the fraction_field_is_field assertion");
    return static_cast<unsigned>(o.rank);
}

Lattice conductor(const OrderAlgebra& o, const SubringLattice& a) {
    if (!a.lattice.full_rank())
        throw math_error("conductor requires a finite-index subring");
    const std::size_t r = o.rank;
    Lattice result = Lattice::full(r);
    for (std::size_t j = 0; j < r; ++j) {
        IntMatrix mj = mult_matrix(o, basis_vec(r, j));
        result = lattice_intersection(result, preimage_lattice(mj, a.lattice));
    }
    // postcondition: an ideal of B contained in A, checked on basis products
    for (std::size_t i = 0; i < result.rank(); ++i) {
        IntVec x = result.basis().row(i);
        if (!lattice_contains(a.lattice, x))
            throw internal_error("conductor is not contained in the subring");
        for (std::size_t j = 0; j < r; ++j) {
            IntVec prod = elem_mul(o, x, basis_vec(r, j));
            if (!lattice_contains(a.lattice, prod))
                throw internal_error("conductor violates x*B <= A");
            if (!lattice_contains(result, prod))
                throw internal_error("conductor is not an ideal of B");
        }
    }
    return result;
}

unsigned LocalDegreeProfile::max_value() const {
    unsigned m = generic_value;
    for (const auto& [p, d] : entries) m = std::max(m, d);
    return m;
}

LocalDegreeProfile local_degree_profile(const OrderAlgebra& o, const SubringLattice& a) {
    if (!a.lattice.full_rank())
        throw math_error("local degree profile requires a finite-index subring");
    Lattice full = Lattice::full(o.rank);
    Int index = lattice_index(a.lattice, full);
    LocalDegreeProfile profile;
    for (const auto& [p, e] : factor_integer(index)) {
        (void)e;
        auto reps = coset_representatives(a.lattice, full, p);
        unsigned d = 1;
        for (const IntVec& rep : reps)
            d = std::max(d, local_integral_degree(o, a, rep, p));
        profile.entries[p] = d;
    }
    return profile;
}

} // namespace intdeg
