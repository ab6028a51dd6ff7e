#pragma once

#include <random>
#include <vector>

#include "intdeg/exactlin.hpp"

namespace intdeg::testsupport {

using Rng = std::mt19937_64;

inline long rand_in(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntVec random_vec(Rng& rng, std::size_t n, long lo = -10, long hi = 10) {
    IntVec v(n);
    for (auto& x : v) x = rand_in(rng, lo, hi);
    return v;
}

inline IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long lo = -10,
                               long hi = 10) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rand_in(rng, lo, hi);
    return m;
}

// random full-rank lattice in Z^n with basis entries in [lo, hi]
inline Lattice random_full_lattice(Rng& rng, std::size_t n, long lo = -10, long hi = 10) {
    for (;;) {
        IntMatrix m = random_matrix(rng, n, n, lo, hi);
        if (determinant(m) != 0) return Lattice(n, m);
    }
}

// random member of a lattice, with small coefficients
inline IntVec random_member(Rng& rng, const Lattice& l, long lo = -4, long hi = 4) {
    IntVec coeffs = random_vec(rng, l.rank(), lo, hi);
    return row_apply(coeffs, l.basis());
}

} // namespace intdeg::testsupport
