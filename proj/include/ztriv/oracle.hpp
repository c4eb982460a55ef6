#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ztriv/algebra.hpp"
#include "ztriv/kodaira.hpp"

// Independent recomputation of the zeta coefficients. Nothing here calls
// series_one_minus_inverse or the factor construction of zeta.hpp: local
// monomials are explicit finite sums over the contact order, and the
// P^1-factor is the finite symmetric-power sum.

namespace ztriv::oracle {

/// Sum over k of A u^{m(k)-1} s^{v(k)} (cusp) or the bare monomial A u^{m-1} s^{v}.
inline DiscSeries explicit_local_monomial(const FiberType& ft, int order) {
    DiscSeries y(order);
    if (!ft.is_cusp_family) {
        const int v = ft.disc_valuation.at(0);
        if (v <= order) y.set(v, lattice_monomial(ft.components_minus_one.at(0), ft.motive));
        return y;
    }
    for (int k = 1; ft.disc_valuation.at(k) <= order; ++k) {
        const int v = ft.disc_valuation.at(k);
        y.set(v, y[v] + lattice_monomial(ft.components_minus_one.at(k), ft.motive));
    }
    return y;
}

/// sum_{N=0}^{D} {Sym^N(P^1)} Y^N, using only multiplication.
inline DiscSeries oracle_factor_expansion(const FiberType& ft, int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    const DiscSeries y = explicit_local_monomial(ft, order);
    DiscSeries total(order);
    DiscSeries y_power = DiscSeries::one(order);
    for (int n = 0; n <= order; ++n) {
        total += y_power.scaled(lattice_constant(motive_sym_p1(n)));
        y_power *= y;
        if (y_power.is_zero()) break;
    }
    return total;
}

inline DiscSeries oracle_z_triv(const Catalog& cat, int order, const LatticePoly& prefactor) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    DiscSeries product = DiscSeries::constant(order, prefactor);
    for (const auto& ft : cat.types) product *= oracle_factor_expansion(ft, order);
    return product;
}

struct FlaggedConfiguration {
    std::string configuration;
    int trivial_lattice_rank = 0;

    friend bool operator==(const FlaggedConfiguration&, const FlaggedConfiguration&) = default;
};

struct CensusRow {
    int degree = 0;
    long long count = 0;
    std::map<int, long long> t_values;      // T -> number of configurations
    std::optional<int> max_contact_order;   // largest cusp k seen, if any cusp fiber occurs
    bool euler_sum_ok = true;               // every configuration has sum e(F_v) = degree
    bool bound_applies = false;             // degree = 12n with n >= 1
    int lefschetz_bound = 0;                // 10n when bound_applies
    std::vector<FlaggedConfiguration> flagged;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusReport {
    CatalogName catalog = CatalogName::full;
    int max_degree = 0;
    std::vector<CensusRow> rows;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

inline CensusRow census_row(const Catalog& cat, int degree) {
    CensusRow row;
    row.degree = degree;
    row.bound_applies = degree > 0 && degree % 12 == 0;
    row.lefschetz_bound = row.bound_applies ? 10 * (degree / 12) : 0;
    for (const auto& config : enumerate_configurations(cat, degree)) {
        ++row.count;
        const int t = trivial_lattice_rank(config);
        ++row.t_values[t];
        int euler_sum = 0;
        for (const auto& e : config.entries()) euler_sum += euler_number(e);
        if (euler_sum != degree) row.euler_sum_ok = false;
        if (auto k = config.max_contact_order(); k && (!row.max_contact_order || *k > *row.max_contact_order)) {
            row.max_contact_order = k;
        }
        if (exceeds_lefschetz_bound(config)) row.flagged.push_back({config.to_string(), t});
    }
    return row;
}

inline CensusReport configuration_census(const Catalog& cat, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("census degree must be >= 0");
    CensusReport report;
    report.catalog = cat.name;
    report.max_degree = max_degree;
    for (int d = 0; d <= max_degree; ++d) report.rows.push_back(census_row(cat, d));
    return report;
}

}  // namespace ztriv::oracle
