#pragma once

// JSON schema
//   LefschetzPoly  {"terms":[{"exp":int,"coef":"decimal"}]}
//   LatticePoly    {"terms":[{"u":int,"coef":LefschetzPoly}]}
//   DiscSeries     {"order":int,"coeffs":[LatticePoly, ...]}   (order+1 entries)
//   monomial list  [{"u":int,"L":int,"c":"decimal"}]           (flat view of a LatticePoly)
// Coefficients are decimal strings so arbitrary precision survives the
// round trip. Object keys are emitted sorted and no field depends on time
// or environment, so the output is byte-stable.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ztriv/algebra.hpp"
#include "ztriv/kodaira.hpp"
#include "ztriv/oracle.hpp"
#include "ztriv/zeta.hpp"

namespace ztriv::io {

using json = nlohmann::json;

inline json to_json(const LefschetzPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", to_decimal(c)}});
    return {{"terms", terms}};
}

inline LefschetzPoly lefschetz_from_json(const json& j) {
    std::vector<LefschetzPoly::term_type> terms;
    for (const auto& t : j.at("terms")) terms.emplace_back(t.at("exp").get<int>(), parse_bigint(t.at("coef").get<std::string>()));
    return LefschetzPoly::from_terms(std::move(terms));
}

inline json to_json(const LatticePoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"u", e}, {"coef", to_json(c)}});
    return {{"terms", terms}};
}

inline LatticePoly lattice_from_json(const json& j) {
    std::vector<LatticePoly::term_type> terms;
    for (const auto& t : j.at("terms")) terms.emplace_back(t.at("u").get<int>(), lefschetz_from_json(t.at("coef")));
    return LatticePoly::from_terms(std::move(terms));
}

inline json to_json(const DiscSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

inline DiscSeries disc_series_from_json(const json& j) {
    const int order = j.at("order").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != static_cast<std::size_t>(order) + 1) throw std::invalid_argument("coefficient count does not match order");
    DiscSeries s(order);
    for (int d = 0; d <= order; ++d) s.set(d, lattice_from_json(coeffs[static_cast<std::size_t>(d)]));
    return s;
}

template <class Coeff>
json monomials_json(const SparsePoly<SparsePoly<Coeff, LaurentExponents>, NonNegativeExponents>& p) {
    json out = json::array();
    for (const auto& [u, lef] : p.terms()) {
        for (const auto& [l, c] : lef.terms()) out.push_back({{"u", u}, {"L", l}, {"c", to_decimal(c)}});
    }
    return out;
}

inline json to_json(const ZetaResult& z) {
    json t = json::array();
    for (std::size_t n = 0; n < z.t_series.size(); ++n) {
        t.push_back({{"n", n}, {"coef", to_json(z.t_series[n])}, {"monomials", monomials_json(z.t_series[n])}});
    }
    return {{"catalog", std::string(catalog_name(z.catalog))},
            {"prefactor", to_json(z.prefactor)},
            {"series", to_json(z.series)},
            {"t_series", t},
            {"residual_degrees", z.residual_degrees}};
}

inline ZetaResult zeta_result_from_json(const json& j) {
    ZetaResult z;
    z.catalog = parse_catalog_name(j.at("catalog").get<std::string>());
    z.prefactor = lattice_from_json(j.at("prefactor"));
    z.series = disc_series_from_json(j.at("series"));
    for (const auto& t : j.at("t_series")) z.t_series.push_back(lattice_from_json(t.at("coef")));
    z.residual_degrees = j.at("residual_degrees").get<std::vector<int>>();
    return z;
}

/// Fully specialized coefficients become rational strings; otherwise monomial lists.
inline json to_json(const DiscSeriesQ& s, bool scalar) {
    json coeffs = json::array();
    for (const auto& c : s.coefficients()) {
        if (scalar) {
            coeffs.push_back(to_decimal(scalar_value(c)));
        } else {
            coeffs.push_back(monomials_json(c));
        }
    }
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

inline json to_json(const oracle::CensusReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json t_values = json::object();
        for (const auto& [t, n] : row.t_values) t_values[std::to_string(t)] = n;
        json flagged = json::array();
        for (const auto& f : row.flagged) flagged.push_back({{"configuration", f.configuration}, {"T", f.trivial_lattice_rank}});
        json entry = {{"degree", row.degree},
                      {"count", row.count},
                      {"t_values", t_values},
                      {"max_contact_order", row.max_contact_order ? json(*row.max_contact_order) : json(nullptr)},
                      {"euler_sum_ok", row.euler_sum_ok},
                      {"flagged", flagged}};
        if (row.bound_applies) entry["lefschetz_bound"] = row.lefschetz_bound;
        rows.push_back(entry);
    }
    return {{"catalog", std::string(catalog_name(r.catalog))}, {"max_degree", r.max_degree}, {"degrees", rows}};
}

inline oracle::CensusReport census_from_json(const json& j) {
    oracle::CensusReport r;
    r.catalog = parse_catalog_name(j.at("catalog").get<std::string>());
    r.max_degree = j.at("max_degree").get<int>();
    for (const auto& entry : j.at("degrees")) {
        oracle::CensusRow row;
        row.degree = entry.at("degree").get<int>();
        row.count = entry.at("count").get<long long>();
        for (const auto& [t, n] : entry.at("t_values").items()) row.t_values[std::stoi(t)] = n.get<long long>();
        if (!entry.at("max_contact_order").is_null()) row.max_contact_order = entry.at("max_contact_order").get<int>();
        row.euler_sum_ok = entry.at("euler_sum_ok").get<bool>();
        row.bound_applies = entry.contains("lefschetz_bound");
        row.lefschetz_bound = row.bound_applies ? entry.at("lefschetz_bound").get<int>() : 0;
        for (const auto& f : entry.at("flagged")) {
            row.flagged.push_back({f.at("configuration").get<std::string>(), f.at("T").get<int>()});
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

inline json affine_json(const AffineInK& f, bool cusp) {
    if (!cusp) return f.offset;
    return {{"slope", f.slope}, {"offset", f.offset}};
}

inline AffineInK affine_from_json(const json& j) {
    if (j.is_number_integer()) return {0, j.get<int>()};
    return {j.at("slope").get<int>(), j.at("offset").get<int>()};
}

/// Catalog export, one object per fiber type, for auditing the built-in data.
inline json to_json(const Catalog& cat) {
    json types = json::array();
    for (const auto& t : cat.types) {
        types.push_back({{"label", std::string(t.name())},
                         {"cusp_family", t.is_cusp_family},
                         {"reduction", t.reduction == Reduction::multiplicative ? "multiplicative" : "additive"},
                         {"stabilizer", {t.stabilizer.r, t.stabilizer.a}},
                         {"components_minus_one", affine_json(t.components_minus_one, t.is_cusp_family)},
                         {"disc_valuation", affine_json(t.disc_valuation, t.is_cusp_family)},
                         {"motive", to_json(t.motive)}});
    }
    return {{"name", std::string(catalog_name(cat.name))},
            {"normalization", cat.normalization_exponent_note},
            {"types", types}};
}

inline Catalog catalog_from_json(const json& j) {
    Catalog cat;
    cat.name = parse_catalog_name(j.at("name").get<std::string>());
    cat.normalization_exponent_note = j.at("normalization").get<std::string>();
    for (const auto& t : j.at("types")) {
        const auto label = parse_label(t.at("label").get<std::string>());
        if (!label) throw std::invalid_argument("unknown fiber label in catalog JSON");
        FiberType ft;
        ft.label = *label;
        ft.is_cusp_family = t.at("cusp_family").get<bool>();
        ft.reduction = t.at("reduction").get<std::string>() == "multiplicative" ? Reduction::multiplicative
                                                                                : Reduction::additive;
        ft.stabilizer = {t.at("stabilizer")[0].get<int>(), t.at("stabilizer")[1].get<int>()};
        ft.components_minus_one = affine_from_json(t.at("components_minus_one"));
        ft.disc_valuation = affine_from_json(t.at("disc_valuation"));
        ft.motive = lefschetz_from_json(t.at("motive"));
        cat.types.push_back(std::move(ft));
    }
    return cat;
}

}  // namespace ztriv::io
