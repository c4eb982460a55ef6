#pragma once

// Hand-rolled random generators for property tests. Seeds are fixed per
// test so failures reproduce.

#include <random>

#include "ztriv/algebra.hpp"

namespace ztriv::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline LefschetzPoly random_lefschetz(Rng& rng, int max_terms = 4, int exp_lo = -3, int exp_hi = 6) {
    std::vector<LefschetzPoly::term_type> terms;
    const int n = uniform(rng, 0, max_terms);
    for (int i = 0; i < n; ++i) {
        BigInt c = uniform(rng, -9, 9);
        // occasionally a coefficient far beyond 64 bits
        if (uniform(rng, 0, 7) == 0) c *= BigInt(1) << 80;
        terms.emplace_back(uniform(rng, exp_lo, exp_hi), c);
    }
    return LefschetzPoly::from_terms(std::move(terms));
}

inline LatticePoly random_lattice(Rng& rng, int max_terms = 3, int max_u = 4) {
    std::vector<LatticePoly::term_type> terms;
    const int n = uniform(rng, 0, max_terms);
    for (int i = 0; i < n; ++i) terms.emplace_back(uniform(rng, 0, max_u), random_lefschetz(rng, 3));
    return LatticePoly::from_terms(std::move(terms));
}

/// Random series; with positive_valuation the constant term is zero.
inline DiscSeries random_series(Rng& rng, int order, bool positive_valuation = false, int max_nonzero = 4) {
    DiscSeries s(order);
    const int n = uniform(rng, 0, max_nonzero);
    for (int i = 0; i < n; ++i) {
        const int lo = positive_valuation ? 1 : 0;
        if (order < lo) break;
        const int d = uniform(rng, lo, order);
        s.set(d, s[d] + random_lattice(rng, 2, 3));
    }
    return s;
}

inline BigRational random_rational(Rng& rng, bool nonzero = false) {
    while (true) {
        BigRational q(BigInt(uniform(rng, -7, 7)), BigInt(uniform(rng, 1, 5)));
        if (!nonzero || q != 0) return q;
    }
}

}  // namespace ztriv::testing
