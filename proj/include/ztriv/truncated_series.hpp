#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ztriv/sparse_poly.hpp"

namespace ztriv {

/**
 * Power series in one variable s, truncated at a fixed order D.
 *
 * Coefficients are stored densely for degrees 0..D. Every result is
 * reduced mod s^{D+1}; binary operations on series of different orders
 * reduce to the smaller order.
 */
template <class Coeff>
class TruncatedSeries {
public:
    using coefficient_type = Coeff;

    TruncatedSeries() : TruncatedSeries(0) {}

    explicit TruncatedSeries(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("truncation order must be >= 0, got " + std::to_string(order));
        coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    TruncatedSeries(int order, std::vector<Coeff> coeffs) : TruncatedSeries(order) {
        const std::size_t n = std::min(coeffs.size(), coeffs_.size());
        for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coeffs[i]);
    }

    static TruncatedSeries constant(int order, Coeff c) {
        TruncatedSeries r(order);
        r.coeffs_[0] = std::move(c);
        return r;
    }

    static TruncatedSeries one(int order) { return constant(order, ring_one<Coeff>()); }

    /// c * s^degree, or zero if degree exceeds the order.
    static TruncatedSeries monomial(int order, int degree, Coeff c) {
        if (degree < 0) throw std::invalid_argument("negative s-degree " + std::to_string(degree));
        TruncatedSeries r(order);
        if (degree <= order) r.coeffs_[static_cast<std::size_t>(degree)] = std::move(c);
        return r;
    }

    int order() const noexcept { return order_; }
    const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }

    const Coeff& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }

    /// Coefficient at any degree; zero beyond the order.
    Coeff coefficient(int degree) const {
        if (degree < 0 || degree > order_) return Coeff{};
        return coeffs_[static_cast<std::size_t>(degree)];
    }

    void set(int degree, Coeff c) { coeffs_.at(static_cast<std::size_t>(degree)) = std::move(c); }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return ring_is_zero(c); });
    }

    /// Lowest degree with a nonzero coefficient; empty for the zero series.
    std::optional<int> valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!ring_is_zero(coeffs_[i])) return static_cast<int>(i);
        }
        return std::nullopt;
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order > order_) {
            throw std::invalid_argument("cannot raise truncation order from " + std::to_string(order_) + " to " +
                                        std::to_string(new_order));
        }
        return TruncatedSeries(new_order, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        for (int d = 0; d <= r.order_; ++d) r.coeffs_[d] = a.coeffs_[d] + b.coeffs_[d];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        for (int d = 0; d <= r.order_; ++d) r.coeffs_[d] = a.coeffs_[d] - b.coeffs_[d];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order_, b.order_));
        for (int i = 0; i <= r.order_; ++i) {
            if (ring_is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= r.order_; ++j) {
                if (ring_is_zero(b.coeffs_[j])) continue;
                add_product(r.coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
            }
        }
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries scaled(const Coeff& factor) const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) {
            if (!ring_is_zero(c)) c = c * factor;
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    int order_;
    std::vector<Coeff> coeffs_;
};

template <class Coeff>
TruncatedSeries<Coeff> power(const TruncatedSeries<Coeff>& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative series power");
    auto result = TruncatedSeries<Coeff>::one(base.order());
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

/// 1/(1 - y) as a truncated series. Requires y to have zero constant term.
template <class Coeff>
TruncatedSeries<Coeff> series_one_minus_inverse(const TruncatedSeries<Coeff>& y) {
    if (!ring_is_zero(y[0])) throw std::domain_error("not a unit complement: series has nonzero constant term");
    const int order = y.order();
    std::vector<Coeff> r(static_cast<std::size_t>(order) + 1);
    r[0] = ring_one<Coeff>();
    // (1 - y) r = 1  <=>  r_d = sum_{i=1..d} y_i r_{d-i}
    for (int d = 1; d <= order; ++d) {
        for (int i = 1; i <= d; ++i) {
            if (ring_is_zero(y[i]) || ring_is_zero(r[d - i])) continue;
            add_product(r[d], y[i], r[d - i]);
        }
    }
    return TruncatedSeries<Coeff>(order, std::move(r));
}

}  // namespace ztriv
