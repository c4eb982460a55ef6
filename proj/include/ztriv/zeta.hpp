#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ztriv/algebra.hpp"
#include "ztriv/kodaira.hpp"
#include "ztriv/mark_variable_poly.hpp"

namespace ztriv {

using MarkingVector = std::array<int, kLabelCount>;
using MarkPoly = MarkVariablePoly<kLabelCount>;

inline constexpr int kDefaultOrder = 24;

/// Delta(s) = 1 - u s, as the series u s whose one-minus-inverse is Delta^{-1}.
inline DiscSeries us_monomial(int order) {
    return DiscSeries::monomial(order, 1, lattice_monomial(1, LefschetzPoly::one()));
}

/// (1 - u s)^{-m}
inline DiscSeries delta_inverse_power(int m, int order) {
    if (m < 0) throw std::invalid_argument("negative cusp multiplicity");
    return power(series_one_minus_inverse(us_monomial(order)), m);
}

/**
 * Closed form of sum_{k>=1} A u^{ak+b} s^{ck+d}, namely
 * A u^{a+b} s^{c+d} / (1 - u^a s^c), truncated at `order`.
 */
inline DiscSeries geometric_resummation(const LefschetzPoly& a_class, int a, int b, int c, int d, int order) {
    if (a < 1 || c < 1) throw std::invalid_argument("geometric resummation needs a, c >= 1");
    if (b < 0 || d < 0) throw std::invalid_argument("geometric resummation needs b, d >= 0");
    const DiscSeries lead = DiscSeries::monomial(order, c + d, lattice_monomial(a + b, a_class));
    const DiscSeries step = DiscSeries::monomial(order, c, lattice_monomial(a, LefschetzPoly::one()));
    return lead * series_one_minus_inverse(step);
}

/// M independent contact orders with the same step: A (u^{a+b} s^{c+d})^M / (1 - u^a s^c)^M.
inline DiscSeries geometric_resummation_power(const LefschetzPoly& a_class, int a, int b, int c, int d, int m,
                                              int order) {
    if (a < 1 || c < 1) throw std::invalid_argument("geometric resummation needs a, c >= 1");
    if (b < 0 || d < 0) throw std::invalid_argument("geometric resummation needs b, d >= 0");
    if (m < 1) throw std::invalid_argument("geometric resummation needs M >= 1");
    const DiscSeries lead = DiscSeries::monomial(order, m * (c + d), lattice_monomial(m * (a + b), a_class));
    const DiscSeries step = DiscSeries::monomial(order, c, lattice_monomial(a, LefschetzPoly::one()));
    return lead * power(series_one_minus_inverse(step), m);
}

/// x_{I.} = s/(1-us) and x_{I*.} = u^5 s^7/(1-us).
inline DiscSeries cusp_resummed_weight(FiberLabel shape, int order) {
    switch (shape) {
        case FiberLabel::ICusp:
            return DiscSeries::monomial(order, 1, LatticePoly::one()) * delta_inverse_power(1, order);
        case FiberLabel::IStarCusp:
            return DiscSeries::monomial(order, 7, lattice_monomial(5, LefschetzPoly::one())) *
                   delta_inverse_power(1, order);
        default: throw std::invalid_argument("not a cusp shape: " + std::string(label_name(shape)));
    }
}

/**
 * One Euler-factor type: Y = A u^B s^C Delta(s)^{-m} with
 * B = b + 5 beta_{I*.}, C = c + beta_{I.} + 7 beta_{I*.}, m = beta_{I.} + beta_{I*.},
 * where b = sum over non-cusp markings of beta (m(beta) - 1).
 */
struct FactorSpec {
    FiberType source;
    MarkingVector beta{};
    int base_s_exponent = 0;  // c_j
    int base_u_exponent = 0;  // b_j
    LefschetzPoly a_class;    // A_j
    int u_exponent = 0;       // B_j
    int s_exponent = 0;       // C_j
    int cusp_multiplicity = 0;  // m_j
    DiscSeries y;
};

inline FactorSpec factor_from_markings(const FiberType& source, const LefschetzPoly& a_class, const MarkingVector& beta,
                                       int base_s_exponent, int order) {
    FactorSpec f{source, beta, base_s_exponent, 0, a_class, 0, 0, 0, DiscSeries(order)};
    for (FiberLabel label : kAllLabels) {
        const int count = beta[label_index(label)];
        if (count < 0) throw std::invalid_argument("negative marking count");
        if (!is_cusp_label(label)) f.base_u_exponent += count * kodaira_symbol(label).components_minus_one.at(0);
    }
    const int n_cusp = beta[label_index(FiberLabel::ICusp)];
    const int n_star = beta[label_index(FiberLabel::IStarCusp)];
    f.u_exponent = f.base_u_exponent + 5 * n_star;
    f.s_exponent = base_s_exponent + n_cusp + 7 * n_star;
    f.cusp_multiplicity = n_cusp + n_star;
    if (f.s_exponent < 1) throw std::invalid_argument("local factor must have positive s-degree");
    f.y = DiscSeries::monomial(order, f.s_exponent, lattice_monomial(f.u_exponent, a_class)) *
          delta_inverse_power(f.cusp_multiplicity, order);
    return f;
}

inline MarkingVector indicator(FiberLabel label) {
    MarkingVector beta{};
    beta[label_index(label)] = 1;
    return beta;
}

/// Base s-exponent c_j of a single-marking factor: v(Delta) for non-cusp types, 0 for cusp shapes.
inline int base_s_exponent(const FiberType& ft) { return ft.is_cusp_family ? 0 : ft.disc_valuation.at(0); }

inline FactorSpec build_factor(const FiberType& ft, int order) {
    return factor_from_markings(ft, ft.motive, indicator(ft.label), base_s_exponent(ft), order);
}

/// Full P^1-factor 1/((1 - Y)(1 - L Y)).
inline DiscSeries euler_factor(const FactorSpec& fs) {
    const LatticePoly l_class = lattice_constant(lefschetz_monomial(1));
    return series_one_minus_inverse(fs.y) * series_one_minus_inverse(fs.y.scaled(l_class));
}

inline LatticePoly default_prefactor(CatalogName name) {
    // Height-zero class {M_11} = L is established only for the full case.
    if (name == CatalogName::full) return lattice_monomial(2, lefschetz_monomial(1));
    return lattice_monomial(2, LefschetzPoly::one());
}

struct ZetaResult {
    CatalogName catalog = CatalogName::full;
    LatticePoly prefactor;
    DiscSeries series;
    std::vector<LatticePoly> t_series;
    std::vector<int> residual_degrees;

    friend bool operator==(const ZetaResult&, const ZetaResult&) = default;
};

/// Coefficients at s^0, s^12, s^24, ... up to the order.
inline std::vector<LatticePoly> extract_t_series(const DiscSeries& series) {
    std::vector<LatticePoly> t;
    for (int d = 0; d <= series.order(); d += 12) t.push_back(series[d]);
    return t;
}

inline std::vector<LatticePoly> extract_t_series(const ZetaResult& z) { return extract_t_series(z.series); }

inline std::vector<int> residual_degrees(const DiscSeries& series) {
    std::vector<int> out;
    for (int d = 0; d <= series.order(); ++d) {
        if (d % 12 != 0 && !series[d].is_zero()) out.push_back(d);
    }
    return out;
}

/// Product of the Euler factors of every catalog type, without prefactor.
inline DiscSeries euler_product(const Catalog& cat, int order) {
    DiscSeries product = DiscSeries::one(order);
    for (const auto& ft : cat.types) product *= euler_factor(build_factor(ft, order));
    return product;
}

inline ZetaResult z_triv(const Catalog& cat, int order, const std::optional<LatticePoly>& prefactor = std::nullopt) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    ZetaResult z;
    z.catalog = cat.name;
    z.prefactor = prefactor ? *prefactor : default_prefactor(cat.name);
    z.series = euler_product(cat, order).scaled(z.prefactor);
    z.t_series = extract_t_series(z.series);
    z.residual_degrees = residual_degrees(z.series);
    return z;
}

/// Least s-valuation of the value substituted for each marking variable.
inline MarkingVector marking_weights() {
    MarkingVector w{};
    w[label_index(FiberLabel::ICusp)] = kodaira_symbol(FiberLabel::ICusp).disc_valuation.at(1);
    w[label_index(FiberLabel::IStarCusp)] = kodaira_symbol(FiberLabel::IStarCusp).disc_valuation.at(1);
    return w;
}

/**
 * H(s; x) = prod_j (1 - A_j x^{beta_j} s^{c_j})^{-{P^1}} over the catalog types,
 * each factor expanded as (1 - Y)^{-1} (1 - L Y)^{-1} in the formal marking variables.
 *
 * Cusp shapes carry c_j = 0; their x-variable has weight v(Delta)(k=1), so the
 * truncation is exact for the later cusp substitutions.
 */
inline MarkPoly multivariate_H(const Catalog& cat, int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    const MarkingVector weights = marking_weights();
    MarkPoly h = MarkPoly::one(order, weights);
    for (const auto& ft : cat.types) {
        const MarkingVector beta = indicator(ft.label);
        const int c = base_s_exponent(ft);
        auto geometric = [&](const LefschetzPoly& scale) {
            MarkPoly g(order, weights);
            MarkingVector e{};
            LefschetzPoly coefficient = LefschetzPoly::one();
            for (int n = 0; n * c <= order; ++n) {
                if (n > 0 && h.weight_of(e) > order) break;
                g.add_term(e, DiscSeries::monomial(order, n * c, lattice_constant(coefficient)));
                for (std::size_t i = 0; i < kLabelCount; ++i) e[i] += beta[i];
                coefficient *= scale;
            }
            return g;
        };
        h = h * geometric(ft.motive) * geometric(ft.motive * lefschetz_monomial(1));
    }
    return h;
}

/// Values x_beta = u^{m(beta)-1} (non-cusp) and the resummed cusp weights.
inline std::array<DiscSeries, kLabelCount> marking_substitution(int order) {
    std::array<DiscSeries, kLabelCount> values;
    for (FiberLabel label : kAllLabels) {
        values[label_index(label)] =
            is_cusp_label(label)
                ? cusp_resummed_weight(label, order)
                : DiscSeries::constant(
                      order, lattice_monomial(kodaira_symbol(label).components_minus_one.at(0), LefschetzPoly::one()));
    }
    return values;
}

}  // namespace ztriv
