#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ztriv/bigint.hpp"
#include "ztriv/sparse_poly.hpp"
#include "ztriv/truncated_series.hpp"

namespace ztriv {

/// Laurent polynomial in the Lefschetz class L with integer coefficients.
using LefschetzPoly = SparsePoly<BigInt, LaurentExponents>;
/// Polynomial in u (trivial-lattice weight) over LefschetzPoly.
using LatticePoly = SparsePoly<LefschetzPoly, NonNegativeExponents>;
/// Series in s (s^12 = t) truncated at a fixed order, over LatticePoly.
using DiscSeries = TruncatedSeries<LatticePoly>;

// Rational-coefficient counterparts, produced by specialization.
using LefschetzPolyQ = SparsePoly<BigRational, LaurentExponents>;
using LatticePolyQ = SparsePoly<LefschetzPolyQ, NonNegativeExponents>;
using DiscSeriesQ = TruncatedSeries<LatticePolyQ>;

inline LefschetzPoly lefschetz_constant(const BigInt& c) { return LefschetzPoly(c); }

/// c * L^exponent
inline LefschetzPoly lefschetz_monomial(int exponent, const BigInt& c = 1) {
    return LefschetzPoly::monomial(exponent, c);
}

/// A * u^u_exponent
inline LatticePoly lattice_monomial(int u_exponent, LefschetzPoly a) {
    return LatticePoly::monomial(u_exponent, std::move(a));
}

inline LatticePoly lattice_constant(LefschetzPoly a) { return LatticePoly(std::move(a)); }

/// Class of Sym^N(P^1) = P^N, i.e. 1 + L + ... + L^N.
inline LefschetzPoly motive_sym_p1(int n) {
    if (n < 0) throw std::invalid_argument("symmetric power index must be >= 0");
    std::vector<LefschetzPoly::term_type> terms;
    terms.reserve(static_cast<std::size_t>(n) + 1);
    for (int e = 0; e <= n; ++e) terms.emplace_back(e, BigInt(1));
    return LefschetzPoly::from_terms(std::move(terms));
}

/// Class of PGL_2 = L(L^2 - 1).
inline LefschetzPoly motive_pgl2() { return lefschetz_monomial(3) - lefschetz_monomial(1); }

/// Class of P^1 = 1 + L.
inline LefschetzPoly motive_p1() { return motive_sym_p1(1); }

template <class Int>
BigRational evaluate(const SparsePoly<Int, LaurentExponents>& p, const BigRational& l_value) {
    BigRational total = 0;
    for (const auto& [exponent, coefficient] : p.terms()) {
        if (exponent < 0 && l_value == 0) {
            throw std::domain_error("division by zero: L = 0 with negative L-exponent present");
        }
        total += BigRational(coefficient) * pow(l_value, exponent);
    }
    return total;
}

template <class Int>
LefschetzPolyQ to_rational(const SparsePoly<Int, LaurentExponents>& p) {
    std::vector<LefschetzPolyQ::term_type> terms;
    terms.reserve(p.size());
    for (const auto& [exponent, coefficient] : p.terms()) terms.emplace_back(exponent, BigRational(coefficient));
    return LefschetzPolyQ::from_terms(std::move(terms));
}

/**
 * Substitutes optional values for u and L into a lattice polynomial.
 *
 * A substituted variable collapses to exponent zero; an absent one is
 * kept symbolic. Throws std::domain_error if L = 0 meets a negative
 * L-exponent.
 */
template <class Int>
LatticePolyQ specialize(const SparsePoly<SparsePoly<Int, LaurentExponents>, NonNegativeExponents>& p,
                        const std::optional<BigRational>& u_value, const std::optional<BigRational>& l_value) {
    std::vector<LatticePolyQ::term_type> terms;
    terms.reserve(p.size());
    for (const auto& [u_exponent, lef] : p.terms()) {
        LefschetzPolyQ coefficient = l_value ? LefschetzPolyQ(evaluate(lef, *l_value)) : to_rational(lef);
        if (u_value) {
            terms.emplace_back(0, coefficient.scaled(pow(*u_value, u_exponent)));
        } else {
            terms.emplace_back(u_exponent, std::move(coefficient));
        }
    }
    return LatticePolyQ::from_terms(std::move(terms));
}

template <class Coeff>
DiscSeriesQ specialize(const TruncatedSeries<Coeff>& p, const std::optional<BigRational>& u_value,
                       const std::optional<BigRational>& l_value) {
    DiscSeriesQ r(p.order());
    for (int d = 0; d <= p.order(); ++d) r.set(d, specialize(p[d], u_value, l_value));
    return r;
}

/// Scalar value of a fully specialized lattice polynomial.
inline BigRational scalar_value(const LatticePolyQ& p) {
    if (p.is_zero()) return 0;
    if (p.size() != 1 || p.terms().front().first != 0) throw std::logic_error("lattice polynomial is not a scalar");
    const LefschetzPolyQ& lef = p.terms().front().second;
    if (lef.size() != 1 || lef.terms().front().first != 0) throw std::logic_error("lattice polynomial is not a scalar");
    return lef.terms().front().second;
}

}  // namespace ztriv
