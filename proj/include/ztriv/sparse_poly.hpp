#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ztriv {

/// Exponent policy for Laurent polynomials: any integer exponent.
struct LaurentExponents {
    static constexpr bool allow_negative = true;
};

/// Exponent policy for ordinary polynomials: exponents are >= 0.
struct NonNegativeExponents {
    static constexpr bool allow_negative = false;
};

template <class T>
T ring_one() {
    if constexpr (requires { T::one(); }) {
        return T::one();
    } else {
        return T(1);
    }
}

template <class T>
bool ring_is_zero(const T& x) {
    return x.is_zero();
}

template <class T>
void add_product(T& acc, const T& a, const T& b) {
    acc += a * b;
}

/**
 * Sparse univariate (Laurent) polynomial over a commutative ring.
 *
 * Terms are kept sorted by exponent with no zero coefficients, so two
 * polynomials are equal exactly when their term vectors are equal and
 * iteration order is deterministic. Nesting works: the coefficient type
 * may itself be a SparsePoly.
 */
template <class Coeff, class Policy = LaurentExponents>
class SparsePoly {
public:
    using coefficient_type = Coeff;
    using term_type = std::pair<int, Coeff>;

    SparsePoly() = default;

    explicit SparsePoly(Coeff constant) {
        if (!ring_is_zero(constant)) terms_.emplace_back(0, std::move(constant));
    }

    static SparsePoly one() { return SparsePoly(ring_one<Coeff>()); }

    static SparsePoly monomial(int exponent, Coeff coefficient) {
        check_exponent(exponent);
        SparsePoly p;
        if (!ring_is_zero(coefficient)) p.terms_.emplace_back(exponent, std::move(coefficient));
        return p;
    }

    /// Builds from arbitrary (possibly repeated, unsorted, zero) terms.
    static SparsePoly from_terms(std::vector<term_type> terms) {
        std::stable_sort(terms.begin(), terms.end(),
                         [](const term_type& a, const term_type& b) { return a.first < b.first; });
        SparsePoly p;
        for (auto& [exponent, coefficient] : terms) {
            check_exponent(exponent);
            if (!p.terms_.empty() && p.terms_.back().first == exponent) {
                p.terms_.back().second += coefficient;
                if (ring_is_zero(p.terms_.back().second)) p.terms_.pop_back();
            } else if (!ring_is_zero(coefficient)) {
                p.terms_.emplace_back(exponent, std::move(coefficient));
            }
        }
        return p;
    }

    const std::vector<term_type>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    int min_exponent() const {
        if (terms_.empty()) throw std::logic_error("min_exponent of the zero polynomial");
        return terms_.front().first;
    }

    int max_exponent() const {
        if (terms_.empty()) throw std::logic_error("max_exponent of the zero polynomial");
        return terms_.back().first;
    }

    Coeff coefficient(int exponent) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                                   [](const term_type& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == exponent) return it->second;
        return Coeff{};
    }

    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& term : r.terms_) term.second = -term.second;
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& other) { return *this = merge(*this, other, false); }
    SparsePoly& operator-=(const SparsePoly& other) { return *this = merge(*this, other, true); }
    SparsePoly& operator*=(const SparsePoly& other) { return *this = multiply(*this, other); }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return multiply(a, b); }

    SparsePoly scaled(const Coeff& factor) const {
        SparsePoly r;
        if (ring_is_zero(factor)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [exponent, coefficient] : terms_) {
            Coeff c = coefficient * factor;
            if (!ring_is_zero(c)) r.terms_.emplace_back(exponent, std::move(c));
        }
        return r;
    }

    /// Multiplies by the monomial x^shift.
    SparsePoly shifted(int shift) const {
        SparsePoly r = *this;
        for (auto& term : r.terms_) {
            term.first += shift;
            check_exponent(term.first);
        }
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

private:
    static void check_exponent(int exponent) {
        if constexpr (!Policy::allow_negative) {
            if (exponent < 0) throw std::invalid_argument("negative exponent " + std::to_string(exponent));
        }
    }

    static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
        SparsePoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                r.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                r.terms_.emplace_back(ib->first, subtract ? Coeff(-ib->second) : ib->second);
                ++ib;
            } else {
                Coeff c = subtract ? Coeff(ia->second - ib->second) : Coeff(ia->second + ib->second);
                if (!ring_is_zero(c)) r.terms_.emplace_back(ia->first, std::move(c));
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    static SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        if (a.is_zero() || b.is_zero()) return r;
        const int lo = a.min_exponent() + b.min_exponent();
        const long long span = static_cast<long long>(a.max_exponent()) + b.max_exponent() - lo + 1;
        const long long work = static_cast<long long>(a.size()) * static_cast<long long>(b.size());
        if (span <= 4 * work + 64) {
            std::vector<Coeff> buffer(static_cast<std::size_t>(span));
            for (const auto& [ea, ca] : a.terms_) {
                for (const auto& [eb, cb] : b.terms_) {
                    add_product(buffer[static_cast<std::size_t>(ea + eb - lo)], ca, cb);
                }
            }
            for (std::size_t i = 0; i < buffer.size(); ++i) {
                if (!ring_is_zero(buffer[i])) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(buffer[i]));
            }
            return r;
        }
        std::vector<term_type> products;
        products.reserve(static_cast<std::size_t>(work));
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) products.emplace_back(ea + eb, ca * cb);
        }
        return from_terms(std::move(products));
    }

    std::vector<term_type> terms_;
};

}  // namespace ztriv
