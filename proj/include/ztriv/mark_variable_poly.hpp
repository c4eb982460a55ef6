#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ztriv/algebra.hpp"

namespace ztriv {

/**
 * Polynomial in finitely many marking variables x_0..x_{N-1} with
 * DiscSeries coefficients.
 *
 * Each variable carries a weight w_i >= 0: the least s-valuation of any
 * series that will later be substituted for it. A term x^e is kept only
 * while its weight |e|_w = sum e_i w_i does not exceed the order D, and
 * its coefficient is stored mod s^{D - |e|_w + 1}. Substitution is then
 * exact mod s^{D+1}. With all weights zero, each coefficient must carry
 * its own positive s-valuation for the product to stay finite.
 */
template <std::size_t N>
class MarkVariablePoly {
public:
    using exponent_vector = std::array<int, N>;
    using weight_vector = std::array<int, N>;

    MarkVariablePoly(int order, weight_vector weights) : order_(order), weights_(weights) {
        if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
        for (int w : weights) {
            if (w < 0) throw std::invalid_argument("marking weights must be >= 0");
        }
    }

    static MarkVariablePoly one(int order, weight_vector weights) {
        MarkVariablePoly p(order, weights);
        p.add_term(exponent_vector{}, DiscSeries::one(order));
        return p;
    }

    int order() const noexcept { return order_; }
    const weight_vector& weights() const noexcept { return weights_; }
    const std::map<exponent_vector, DiscSeries>& terms() const noexcept { return terms_; }

    int weight_of(const exponent_vector& e) const {
        int w = 0;
        for (std::size_t i = 0; i < N; ++i) {
            if (e[i] < 0) throw std::invalid_argument("marking exponents must be >= 0");
            w += e[i] * weights_[i];
        }
        return w;
    }

    /// Coefficient series of x^e (order D - |e|_w); throws if the term is truncated away.
    DiscSeries coefficient(const exponent_vector& e) const {
        const int budget = order_ - weight_of(e);
        if (budget < 0) throw std::out_of_range("marking monomial lies beyond the truncation order");
        auto it = terms_.find(e);
        return it == terms_.end() ? DiscSeries(budget) : it->second;
    }

    /// Adds c * x^e, truncating c to the admissible order. Terms past the order are dropped.
    void add_term(const exponent_vector& e, const DiscSeries& c) {
        const int budget = order_ - weight_of(e);
        if (budget < 0) return;
        if (c.order() < budget) throw std::invalid_argument("coefficient series order too small for this term");
        DiscSeries trimmed = c.truncated(budget);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!trimmed.is_zero()) terms_.emplace(e, std::move(trimmed));
            return;
        }
        it->second += trimmed;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend MarkVariablePoly operator*(const MarkVariablePoly& a, const MarkVariablePoly& b) {
        check_compatible(a, b);
        MarkVariablePoly r(std::min(a.order_, b.order_), a.weights_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                exponent_vector e{};
                for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                const int budget = r.order_ - r.weight_of(e);
                if (budget < 0) continue;
                r.add_term(e, ca.truncated(budget) * cb.truncated(budget));
            }
        }
        return r;
    }

    friend MarkVariablePoly operator+(const MarkVariablePoly& a, const MarkVariablePoly& b) {
        check_compatible(a, b);
        MarkVariablePoly r(std::min(a.order_, b.order_), a.weights_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, c);
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    /**
     * Evaluates at x_i = values[i]. Each value must have s-valuation at
     * least w_i; the result is exact mod s^{D+1}.
     */
    DiscSeries substitute(const std::array<DiscSeries, N>& values) const {
        for (std::size_t i = 0; i < N; ++i) {
            if (values[i].order() < order_) throw std::invalid_argument("substituted series order too small");
            const auto v = values[i].valuation();
            if (weights_[i] > 0 && v && *v < weights_[i]) {
                throw std::invalid_argument("substituted series has s-valuation below the marking weight");
            }
        }
        std::array<std::vector<DiscSeries>, N> powers;
        for (std::size_t i = 0; i < N; ++i) powers[i].push_back(DiscSeries::one(order_));
        auto power_of = [&](std::size_t i, int k) -> const DiscSeries& {
            while (static_cast<int>(powers[i].size()) <= k) {
                powers[i].push_back(powers[i].back() * values[i].truncated(order_));
            }
            return powers[i][static_cast<std::size_t>(k)];
        };
        DiscSeries total(order_);
        for (const auto& [e, c] : terms_) {
            DiscSeries monomial = DiscSeries::one(order_);
            for (std::size_t i = 0; i < N; ++i) {
                if (e[i] > 0) monomial *= power_of(i, e[i]);
            }
            // c is only known mod s^{budget+1}; monomial has valuation >= |e|_w, so
            // padding c with zeros above its order changes nothing below s^{D+1}.
            DiscSeries padded(order_, c.coefficients());
            total += padded * monomial;
        }
        return total;
    }

private:
    static void check_compatible(const MarkVariablePoly& a, const MarkVariablePoly& b) {
        if (a.weights_ != b.weights_) throw std::invalid_argument("marking weights differ");
    }

    int order_;
    weight_vector weights_;
    std::map<exponent_vector, DiscSeries> terms_;
};

}  // namespace ztriv
