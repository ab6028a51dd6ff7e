#include "intdeg/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace intdeg {

namespace {

std::string dim_str(std::size_t r, std::size_t c) {
    std::ostringstream os;
    os << r << "x" << c;
    return os.str();
}

// floor division quotient
Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool abs_less(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

} // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw math_error("row " + std::to_string(i) + " has length " +
                             std::to_string(rows[i].size()) + ", expected " +
                             std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw internal_error("mat_mul dimension mismatch " + dim_str(a.rows(), a.cols()) +
                             " * " + dim_str(b.rows(), b.cols()));
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

IntVec mat_apply(const IntMatrix& m, const IntVec& x) {
    if (m.cols() != x.size()) throw internal_error("mat_apply dimension mismatch");
    IntVec y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m.at(i, j) * x[j];
    return y;
}

IntVec row_apply(const IntVec& x, const IntMatrix& m) {
    if (m.rows() != x.size()) throw internal_error("row_apply dimension mismatch");
    IntVec y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m.at(i, j);
    }
    return y;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw internal_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // Bareiss: division by the previous pivot is exact
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

// --- HNF ---------------------------------------------------------------

namespace {

// rows (i, j) <- (p*row_i + q*row_j, u*row_i + v*row_j), applied to both
// matrices; the 2x2 transform must be unimodular.
void combine_rows(IntMatrix& h, IntMatrix& u_acc, std::size_t i, std::size_t j,
                  const Int& p, const Int& q, const Int& u, const Int& v) {
    for (std::size_t c = 0; c < h.cols(); ++c) {
        Int hi = h.at(i, c), hj = h.at(j, c);
        h.at(i, c) = p * hi + q * hj;
        h.at(j, c) = u * hi + v * hj;
    }
    for (std::size_t c = 0; c < u_acc.cols(); ++c) {
        Int ui = u_acc.at(i, c), uj = u_acc.at(j, c);
        u_acc.at(i, c) = p * ui + q * uj;
        u_acc.at(j, c) = u * ui + v * uj;
    }
}

void row_submul(IntMatrix& h, IntMatrix& u_acc, std::size_t dst, std::size_t src,
                const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < h.cols(); ++c) h.at(dst, c) -= q * h.at(src, c);
    for (std::size_t c = 0; c < u_acc.cols(); ++c) u_acc.at(dst, c) -= q * u_acc.at(src, c);
}

void negate_row(IntMatrix& h, IntMatrix& u_acc, std::size_t i) {
    for (std::size_t c = 0; c < h.cols(); ++c) h.at(i, c) = -h.at(i, c);
    for (std::size_t c = 0; c < u_acc.cols(); ++c) u_acc.at(i, c) = -u_acc.at(i, c);
}

} // namespace

HnfResult hnf(const IntMatrix& m) {
    const std::size_t nrows = m.rows(), ncols = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(nrows);
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        // smallest-|value| pivot limits entry growth
        std::size_t piv = nrows;
        for (std::size_t r = row; r < nrows; ++r) {
            if (h.at(r, col) == 0) continue;
            if (piv == nrows || abs_less(h.at(r, col), h.at(piv, col))) piv = r;
        }
        if (piv == nrows) continue;
        if (piv != row) {
            h.swap_rows(row, piv);
            u.swap_rows(row, piv);
        }
        for (std::size_t r = row + 1; r < nrows; ++r) {
            if (h.at(r, col) == 0) continue;
            Int a = h.at(row, col), b = h.at(r, col);
            if (b % a == 0) {
                row_submul(h, u, r, row, b / a);
                continue;
            }
            Int g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
                       b.get_mpz_t());
            // [[p, q], [-b/g, a/g]] has determinant 1
            combine_rows(h, u, row, r, p, q, -b / g, a / g);
        }
        if (h.at(row, col) < 0) negate_row(h, u, row);
        for (std::size_t r = 0; r < row; ++r)
            row_submul(h, u, r, row, fdiv(h.at(r, col), h.at(row, col)));
        ++row;
    }
    return HnfResult{std::move(h), std::move(u), row};
}

// --- SNF ---------------------------------------------------------------

namespace {

struct SnfWork {
    IntMatrix d, u, v, vinv;

    void row_combine(std::size_t i, std::size_t j, const Int& p, const Int& q,
                     const Int& r, const Int& s) {
        combine_rows(d, u, i, j, p, q, r, s);
    }
    // cols (i, j) <- (p*c_i + q*c_j, r*c_i + s*c_j); block det p*s - q*r = 1.
    // The inverse block [[s, -r], [-q, p]] is applied to the rows of vinv.
    void col_combine(std::size_t i, std::size_t j, const Int& p, const Int& q,
                     const Int& r, const Int& s) {
        for (std::size_t k = 0; k < d.rows(); ++k) {
            Int di = d.at(k, i), dj = d.at(k, j);
            d.at(k, i) = p * di + q * dj;
            d.at(k, j) = r * di + s * dj;
        }
        for (std::size_t k = 0; k < v.rows(); ++k) {
            Int vi = v.at(k, i), vj = v.at(k, j);
            v.at(k, i) = p * vi + q * vj;
            v.at(k, j) = r * vi + s * vj;
        }
        for (std::size_t k = 0; k < vinv.cols(); ++k) {
            Int wi = vinv.at(i, k), wj = vinv.at(j, k);
            vinv.at(i, k) = s * wi - r * wj;
            vinv.at(j, k) = -q * wi + p * wj;
        }
    }
    void col_submul(std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < d.rows(); ++k) d.at(k, dst) -= q * d.at(k, src);
        for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, dst) -= q * v.at(k, src);
        for (std::size_t k = 0; k < vinv.cols(); ++k)
            vinv.at(src, k) += q * vinv.at(dst, k);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        vinv.swap_rows(i, j);
    }
    void negate_col(std::size_t j) {
        for (std::size_t k = 0; k < d.rows(); ++k) d.at(k, j) = -d.at(k, j);
        for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, j) = -v.at(k, j);
        for (std::size_t k = 0; k < vinv.cols(); ++k) vinv.at(j, k) = -vinv.at(j, k);
    }
};

} // namespace

SnfFull snf_full(const IntMatrix& m) {
    const std::size_t nrows = m.rows(), ncols = m.cols();
    SnfWork w{m, IntMatrix::identity(nrows), IntMatrix::identity(ncols),
              IntMatrix::identity(ncols)};
    const std::size_t k = std::min(nrows, ncols);
    std::size_t t = 0;
    for (; t < k; ++t) {
        // smallest-|value| pivot among the remaining block
        std::size_t pr = nrows, pc = ncols;
        for (std::size_t i = t; i < nrows; ++i)
            for (std::size_t j = t; j < ncols; ++j) {
                if (w.d.at(i, j) == 0) continue;
                if (pr == nrows || abs_less(w.d.at(i, j), w.d.at(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr == nrows) break;
        w.d.swap_rows(t, pr);
        w.u.swap_rows(t, pr);
        w.swap_cols(t, pc);
        while (true) {
            for (std::size_t i = t + 1; i < nrows; ++i) {
                if (w.d.at(i, t) == 0) continue;
                Int a = w.d.at(t, t), b = w.d.at(i, t);
                if (b % a == 0) {
                    // exact multiple: plain subtraction keeps row t intact
                    Int q = b / a;
                    for (std::size_t c = 0; c < ncols; ++c)
                        w.d.at(i, c) -= q * w.d.at(t, c);
                    for (std::size_t c = 0; c < nrows; ++c)
                        w.u.at(i, c) -= q * w.u.at(t, c);
                    continue;
                }
                Int g, p, q;
                mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
                           b.get_mpz_t());
                w.row_combine(t, i, p, q, -b / g, a / g);
            }
            for (std::size_t j = t + 1; j < ncols; ++j) {
                if (w.d.at(t, j) == 0) continue;
                Int a = w.d.at(t, t), b = w.d.at(t, j);
                if (b % a == 0) {
                    // exact multiple: column t stays clean
                    w.col_submul(j, t, b / a);
                    continue;
                }
                Int g, p, q;
                mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
                           b.get_mpz_t());
                w.col_combine(t, j, p, q, -b / g, a / g);
            }
            // a gcd column op may repopulate column t, but it also strictly
            // shrinks the pivot, so this loop terminates
            bool col_dirty = false;
            for (std::size_t i = t + 1; i < nrows && !col_dirty; ++i)
                col_dirty = (w.d.at(i, t) != 0);
            if (!col_dirty) break;
        }
        if (w.d.at(t, t) < 0) w.negate_col(t);
    }
    // enforce the divisibility chain d_i | d_j for i < j
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j) {
                const Int di = w.d.at(i, i), dj = w.d.at(j, j);
                if (di == 0 || dj % di == 0) continue;
                // fold d_j into position i: new pair (gcd, lcm)
                w.col_submul(i, j, Int(-1));  // col_i += col_j
                Int g, p, q;
                mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), di.get_mpz_t(),
                           dj.get_mpz_t());
                w.row_combine(i, j, p, q, -dj / g, di / g);
                // row i is now (g, q*dj); clear the off-diagonal entry
                w.col_submul(j, i, w.d.at(i, j) / g);
                if (w.d.at(i, i) < 0) w.negate_col(i);
                if (w.d.at(j, j) < 0) w.negate_col(j);
                changed = true;
            }
    }
    return SnfFull{std::move(w.d), std::move(w.u), std::move(w.v), std::move(w.vinv)};
}

SnfResult snf(const IntMatrix& m) {
    SnfFull f = snf_full(m);
    return SnfResult{std::move(f.D), std::move(f.U), std::move(f.V)};
}

std::optional<IntVec> solve_linear(const IntMatrix& a, const IntVec& b) {
    if (a.rows() != b.size()) throw internal_error("solve_linear dimension mismatch");
    SnfFull f = snf_full(a);
    IntVec ub = mat_apply(f.U, b);
    const std::size_t k = std::min(a.rows(), a.cols());
    IntVec z(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Int di = (i < k) ? f.D.at(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            z[i] = ub[i] / di;
        }
    }
    return mat_apply(f.V, z);
}

IntMatrix left_kernel(const IntMatrix& m) {
    HnfResult r = hnf(m);
    IntMatrix k(m.rows() - r.rank, m.rows());
    for (std::size_t i = r.rank; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) k.at(i - r.rank, j) = r.U.at(i, j);
    return k;
}

// --- Lattice -----------------------------------------------------------

Lattice::Lattice(std::size_t ambient_rank, const IntMatrix& spanning_rows)
    : ambient_(ambient_rank) {
    if (spanning_rows.cols() != ambient_rank && spanning_rows.rows() != 0)
        throw math_error("lattice spanning rows have wrong width");
    HnfResult r = hnf(spanning_rows);
    basis_ = IntMatrix(r.rank, ambient_rank);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < ambient_rank; ++j) basis_.at(i, j) = r.H.at(i, j);
}

Lattice Lattice::full(std::size_t n) { return Lattice(n, IntMatrix::identity(n)); }

Lattice Lattice::zero(std::size_t n) { return Lattice(n, IntMatrix(0, n)); }

Lattice Lattice::scaled(std::size_t n, const Int& f) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f;
    return Lattice(n, m);
}

Lattice Lattice::span_of(std::size_t n, const std::vector<IntVec>& rows) {
    return Lattice(n, IntMatrix::from_rows(rows, n));
}

Int Lattice::det() const {
    if (!full_rank()) throw math_error("lattice is rank-deficient");
    Int d = 1;
    for (std::size_t i = 0; i < ambient_; ++i) d *= basis_.at(i, i);
    return d;
}

namespace {

// pivot column of HNF basis row i
std::size_t pivot_col(const IntMatrix& b, std::size_t i) {
    for (std::size_t j = 0; j < b.cols(); ++j)
        if (b.at(i, j) != 0) return j;
    throw internal_error("zero row in lattice basis");
}

} // namespace

std::optional<IntVec> lattice_coords(const Lattice& l, const IntVec& v) {
    if (v.size() != l.ambient_rank()) throw math_error("vector/lattice rank mismatch");
    IntVec rest = v;
    IntVec coords(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) {
        const std::size_t p = pivot_col(l.basis(), i);
        const Int& piv = l.basis().at(i, p);
        if (rest[p] % piv != 0) return std::nullopt;
        coords[i] = rest[p] / piv;
        if (coords[i] != 0)
            for (std::size_t j = p; j < v.size(); ++j)
                rest[j] -= coords[i] * l.basis().at(i, j);
    }
    for (const Int& x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

bool lattice_contains(const Lattice& l, const IntVec& v) {
    return lattice_coords(l, v).has_value();
}

std::optional<MinDenominator> solve_min_denominator(const Lattice& l, const IntVec& v) {
    if (v.size() != l.ambient_rank()) throw math_error("vector/lattice rank mismatch");
    std::vector<Rat> rest(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) rest[j] = v[j];
    std::vector<Rat> coords(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) {
        const std::size_t p = pivot_col(l.basis(), i);
        coords[i] = rest[p] / Rat(l.basis().at(i, p));
        coords[i].canonicalize();
        if (coords[i] != 0)
            for (std::size_t j = p; j < v.size(); ++j)
                rest[j] -= coords[i] * Rat(l.basis().at(i, j));
    }
    for (const Rat& x : rest)
        if (x != 0) return std::nullopt;
    Int d = 1;
    for (const Rat& c : coords) {
        Int den = c.get_den();
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
    }
    return MinDenominator{std::move(coords), std::move(d)};
}

Lattice lattice_intersection(const Lattice& l1, const Lattice& l2) {
    if (l1.ambient_rank() != l2.ambient_rank())
        throw math_error("lattice intersection in different ambient ranks");
    const std::size_t n = l1.ambient_rank();
    const std::size_t k1 = l1.rank(), k2 = l2.rank();
    IntMatrix stacked(k1 + k2, n);
    for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = l1.basis().at(i, j);
    for (std::size_t i = 0; i < k2; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(k1 + i, j) = l2.basis().at(i, j);
    IntMatrix ker = left_kernel(stacked);
    // the a-parts of kernel rows (a | b) satisfy a*B1 = -b*B2, spanning L1 ^ L2
    IntMatrix rows(ker.rows(), n);
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        IntVec a(k1);
        for (std::size_t j = 0; j < k1; ++j) a[j] = ker.at(i, j);
        IntVec x = row_apply(a, l1.basis());
        for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = x[j];
    }
    return Lattice(n, rows);
}

Lattice preimage_lattice(const IntMatrix& m, const Lattice& target) {
    if (m.cols() != target.ambient_rank())
        throw math_error("preimage target rank mismatch");
    const std::size_t dom = m.rows(), k = target.rank();
    IntMatrix stacked(dom + k, m.cols());
    for (std::size_t i = 0; i < dom; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) stacked.at(i, j) = m.at(i, j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            stacked.at(dom + i, j) = -target.basis().at(i, j);
    IntMatrix ker = left_kernel(stacked);
    IntMatrix rows(ker.rows(), dom);
    for (std::size_t i = 0; i < ker.rows(); ++i)
        for (std::size_t j = 0; j < dom; ++j) rows.at(i, j) = ker.at(i, j);
    return Lattice(dom, rows);
}

Int lattice_index(const Lattice& sub, const Lattice& super) {
    if (sub.ambient_rank() != super.ambient_rank())
        throw math_error("lattice index in different ambient ranks");
    if (!sub.full_rank() || !super.full_rank()) throw math_error("rank-deficient");
    for (std::size_t i = 0; i < sub.rank(); ++i)
        if (!lattice_contains(super, sub.basis().row(i)))
            throw math_error("not a sublattice");
    Int ds = sub.det(), dS = super.det();
    if (ds % dS != 0) throw internal_error("index is not integral");
    return ds / dS;
}

std::vector<IntVec> coset_representatives(const Lattice& sub, const Lattice& super,
                                          const std::optional<Int>& p) {
    if (sub.ambient_rank() != super.ambient_rank())
        throw math_error("coset enumeration in different ambient ranks");
    if (!sub.full_rank() || !super.full_rank()) throw math_error("rank-deficient");
    const std::size_t r = super.ambient_rank();
    // coordinates of the sub basis inside the super basis
    IntMatrix c(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        auto coords = lattice_coords(super, sub.basis().row(i));
        if (!coords) throw math_error("not a sublattice");
        for (std::size_t j = 0; j < r; ++j) c.at(i, j) = (*coords)[j];
    }
    SnfFull f = snf_full(c);
    std::vector<Int> step(r), count(r);
    Int total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        Int di = f.D.at(i, i);
        if (di == 0) throw math_error("rank-deficient");
        if (p) {
            unsigned long v = p_valuation(di, *p);
            Int ppow;
            mpz_pow_ui(ppow.get_mpz_t(), p->get_mpz_t(), v);
            step[i] = di / ppow;
            count[i] = ppow;
        } else {
            step[i] = 1;
            count[i] = di;
        }
        total *= count[i];
    }
    if (total > 200000)
        throw math_error("quotient too large to enumerate (" + total.get_str() + " classes)");
    std::vector<IntVec> reps;
    reps.reserve(total.get_ui());
    IntVec tuple(r);
    const unsigned long n = total.get_ui();
    for (unsigned long idx = 0; idx < n; ++idx) {
        // Smith coordinates -> super-basis coordinates -> ambient
        IntVec smith(r);
        for (std::size_t i = 0; i < r; ++i) smith[i] = tuple[i] * step[i];
        IntVec x = row_apply(smith, f.Vinv);
        reps.push_back(row_apply(x, super.basis()));
        for (std::size_t i = r; i-- > 0;) {
            tuple[i] += 1;
            if (tuple[i] < count[i]) break;
            tuple[i] = 0;
        }
    }
    return reps;
}

std::optional<IntVec> solve_congruence_system(const IntMatrix& n, const IntVec& t,
                                              const Lattice& l) {
    const std::size_t m = l.ambient_rank();
    if (n.rows() != m || t.size() != m)
        throw math_error("congruence system dimension mismatch");
    if (!l.full_rank()) throw math_error("congruence target lattice must be full rank");
    // v in L  <=>  (V^T v)_i = 0 mod e_i, with U*B*V = diag(e)
    SnfFull f = snf_full(l.basis());
    IntMatrix vt = transpose(f.V);
    IntMatrix lhs = mat_mul(vt, n);
    IntVec rhs = mat_apply(vt, t);
    const std::size_t k = n.cols();
    IntMatrix aug(m, k + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug.at(i, j) = lhs.at(i, j);
        aug.at(i, k + i) = f.D.at(i, i);
    }
    IntVec b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = -rhs[i];
    auto sol = solve_linear(aug, b);
    if (!sol) return std::nullopt;
    IntVec x(k);
    for (std::size_t j = 0; j < k; ++j) x[j] = (*sol)[j];
    return x;
}

unsigned long p_valuation(const Int& n, const Int& p) {
    if (n == 0) throw math_error("valuation of zero");
    Int rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw math_error("factorization of zero");
    std::vector<std::pair<Int, unsigned>> out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    for (Int p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

} // namespace intdeg
