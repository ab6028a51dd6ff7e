#pragma once

/* Exact integer/rational linear algebra kernel: Hermite and Smith normal
 * forms with transforms, integer lattices in canonical HNF representation,
 * membership / minimal-denominator / intersection / index / coset
 * enumeration, and exact solvers for integer linear systems and linear
 * congruence systems modulo a lattice.
 *
 * Everything runs on arbitrary-precision integers; operations are pure
 * functions over immutable values. */

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "intdeg/errors.hpp"

namespace intdeg {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntVec mat_apply(const IntMatrix& m, const IntVec& x);      // column convention: m*x
IntVec row_apply(const IntVec& x, const IntMatrix& m);      // row convention: x*m
IntMatrix transpose(const IntMatrix& m);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& m);

/* Row-style Hermite normal form. H = U*M with U unimodular; H is echelon
 * with positive pivots, entries above each pivot reduced into [0, pivot),
 * zero rows at the bottom. This form is canonical: two row sets spanning
 * the same lattice produce identical H. */
struct HnfResult {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank;
};

HnfResult hnf(const IntMatrix& m);

/* Smith normal form. D = U*M*V diagonal with d_1 | d_2 | ... | d_k >= 0,
 * U and V unimodular. snf_full additionally carries V^{-1}, used to map
 * Smith coordinates back to ambient coordinates. */
struct SnfResult {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;
};

struct SnfFull {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;
    IntMatrix Vinv;
};

SnfResult snf(const IntMatrix& m);
SnfFull snf_full(const IntMatrix& m);

/// Integer solution of A*x = b (column convention), via SNF. nullopt when
/// no integer solution exists; the decision is exact.
std::optional<IntVec> solve_linear(const IntMatrix& a, const IntVec& b);

/// Basis (as matrix rows) of the left kernel {x : x*M = 0}.
IntMatrix left_kernel(const IntMatrix& m);

/* A sublattice of Z^ambient_rank, stored as an HNF-canonical basis with
 * linearly independent rows. Equal lattices compare equal. */
class Lattice {
public:
    Lattice(std::size_t ambient_rank, const IntMatrix& spanning_rows);

    static Lattice full(std::size_t n);                  // Z^n
    static Lattice zero(std::size_t n);                  // {0}
    static Lattice scaled(std::size_t n, const Int& f);  // f*Z^n
    static Lattice span_of(std::size_t n, const std::vector<IntVec>& rows);

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    bool full_rank() const { return rank() == ambient_; }
    const IntMatrix& basis() const { return basis_; }

    /// |det| of the basis for full-rank lattices (product of HNF pivots).
    Int det() const;

    bool operator==(const Lattice& o) const = default;

private:
    std::size_t ambient_;
    IntMatrix basis_;
};

/// Membership with witness: coords such that coords*basis = v.
std::optional<IntVec> lattice_coords(const Lattice& l, const IntVec& v);
bool lattice_contains(const Lattice& l, const IntVec& v);

struct MinDenominator {
    std::vector<Rat> coords;  // rational coordinates of v in the basis
    Int denom;                // minimal d >= 1 with d*v in the lattice
};

/// Minimal positive d with d*v in L, with rational witness coordinates.
/// nullopt iff v lies outside the rational span of L.
std::optional<MinDenominator> solve_min_denominator(const Lattice& l, const IntVec& v);

Lattice lattice_intersection(const Lattice& l1, const Lattice& l2);

/// {x : x*M in target}, as a lattice in the domain of the row action x*M.
Lattice preimage_lattice(const IntMatrix& m, const Lattice& target);

/// Index [super : sub] for nested full-rank lattices.
Int lattice_index(const Lattice& sub, const Lattice& super);

/* Representatives of super/sub (full rank, sub contained in super),
 * enumerated through Smith coordinates of the quotient. With p given,
 * only the p-primary classes are produced. Enumeration order is
 * deterministic. */
std::vector<IntVec> coset_representatives(const Lattice& sub, const Lattice& super,
                                          const std::optional<Int>& p = std::nullopt);

/// Exact decision procedure for N*x + t in L (L full rank): a witness x,
/// or nullopt when the induced congruence system is infeasible.
std::optional<IntVec> solve_congruence_system(const IntMatrix& n, const IntVec& t,
                                              const Lattice& l);

/// p-adic valuation of a nonzero integer.
unsigned long p_valuation(const Int& n, const Int& p);

/// Trial-division factorization, smallest prime first.
std::vector<std::pair<Int, unsigned>> factor_integer(Int n);

} // namespace intdeg
