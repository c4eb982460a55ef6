#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ztriv/algebra.hpp"

namespace ztriv {

/// Inertia labels: eight non-cusp Kodaira symbols and the two cusp shapes.
enum class FiberLabel : std::uint8_t {
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
    I0StarGenericJ,
    I0StarSpecialJ,
    ICusp,
    IStarCusp,
};

inline constexpr std::size_t kLabelCount = 10;

inline constexpr std::array<FiberLabel, kLabelCount> kAllLabels = {
    FiberLabel::II,     FiberLabel::III,           FiberLabel::IV,
    FiberLabel::IIStar, FiberLabel::IIIStar,       FiberLabel::IVStar,
    FiberLabel::I0StarGenericJ, FiberLabel::I0StarSpecialJ, FiberLabel::ICusp,
    FiberLabel::IStarCusp,
};

constexpr std::size_t label_index(FiberLabel label) { return static_cast<std::size_t>(label); }

constexpr std::string_view label_name(FiberLabel label) {
    switch (label) {
        case FiberLabel::II: return "II";
        case FiberLabel::III: return "III";
        case FiberLabel::IV: return "IV";
        case FiberLabel::IIStar: return "II*";
        case FiberLabel::IIIStar: return "III*";
        case FiberLabel::IVStar: return "IV*";
        case FiberLabel::I0StarGenericJ: return "I0*_generic_j";
        case FiberLabel::I0StarSpecialJ: return "I0*_special_j";
        case FiberLabel::ICusp: return "I_cusp";
        case FiberLabel::IStarCusp: return "I*_cusp";
    }
    return "?";
}

inline std::optional<FiberLabel> parse_label(std::string_view name) {
    for (FiberLabel label : kAllLabels) {
        if (label_name(label) == name) return label;
    }
    return std::nullopt;
}

constexpr bool is_cusp_label(FiberLabel label) {
    return label == FiberLabel::ICusp || label == FiberLabel::IStarCusp;
}

/// slope * k + offset, for invariants of the cusp families. Non-cusp types use slope 0.
struct AffineInK {
    int slope = 0;
    int offset = 0;

    constexpr int at(int k) const { return slope * k + offset; }
    friend constexpr bool operator==(const AffineInK&, const AffineInK&) = default;
};

enum class Reduction : std::uint8_t { multiplicative, additive };

/// Stabilizer order r and character a of the twisting at the marked point.
struct Stabilizer {
    int r = 0;
    int a = 0;
    friend constexpr bool operator==(const Stabilizer&, const Stabilizer&) = default;
};

/// Geometric invariants of a Kodaira symbol (catalog independent).
struct KodairaSymbol {
    FiberLabel label;
    Reduction reduction;
    Stabilizer stabilizer;
    AffineInK components_minus_one;  // m_v - 1
    AffineInK disc_valuation;        // v(Delta)
};

constexpr KodairaSymbol kodaira_symbol(FiberLabel label) {
    using enum FiberLabel;
    using R = Reduction;
    switch (label) {
        case ICusp: return {label, R::multiplicative, {0, 0}, {1, -1}, {1, 0}};
        case II: return {label, R::additive, {6, 1}, {0, 0}, {0, 2}};
        case III: return {label, R::additive, {4, 1}, {0, 1}, {0, 3}};
        case IV: return {label, R::additive, {3, 1}, {0, 2}, {0, 4}};
        case IStarCusp: return {label, R::additive, {2, 1}, {1, 4}, {1, 6}};
        case I0StarGenericJ: return {label, R::additive, {2, 1}, {0, 4}, {0, 6}};
        case I0StarSpecialJ: return {label, R::additive, {2, 1}, {0, 4}, {0, 6}};
        case IVStar: return {label, R::additive, {3, 2}, {0, 6}, {0, 8}};
        case IIIStar: return {label, R::additive, {4, 3}, {0, 7}, {0, 9}};
        case IIStar: return {label, R::additive, {6, 5}, {0, 8}, {0, 10}};
    }
    throw std::logic_error("unknown fiber label");
}

/// One row of a fiber-type catalog: Kodaira invariants plus the normalized one-fiber class A.
struct FiberType {
    FiberLabel label;
    bool is_cusp_family = false;
    Reduction reduction = Reduction::additive;
    Stabilizer stabilizer;
    AffineInK components_minus_one;
    AffineInK disc_valuation;
    LefschetzPoly motive;

    std::string_view name() const { return label_name(label); }
    int components_minus_one_at(int k) const { return components_minus_one.at(is_cusp_family ? k : 0); }
    int disc_valuation_at(int k) const { return disc_valuation.at(is_cusp_family ? k : 0); }

    friend bool operator==(const FiberType&, const FiberType&) = default;
};

inline FiberType make_fiber_type(FiberLabel label, LefschetzPoly motive) {
    const KodairaSymbol sym = kodaira_symbol(label);
    return FiberType{label,
                     is_cusp_label(label),
                     sym.reduction,
                     sym.stabilizer,
                     sym.components_minus_one,
                     sym.disc_valuation,
                     std::move(motive)};
}

enum class CatalogName : std::uint8_t { full, gamma1_2, gamma1_3, gamma1_4 };

inline constexpr std::array<CatalogName, 4> kAllCatalogs = {CatalogName::full, CatalogName::gamma1_2,
                                                           CatalogName::gamma1_3, CatalogName::gamma1_4};

constexpr std::string_view catalog_name(CatalogName name) {
    switch (name) {
        case CatalogName::full: return "full";
        case CatalogName::gamma1_2: return "gamma1_2";
        case CatalogName::gamma1_3: return "gamma1_3";
        case CatalogName::gamma1_4: return "gamma1_4";
    }
    return "?";
}

inline CatalogName parse_catalog_name(std::string_view name) {
    for (CatalogName c : kAllCatalogs) {
        if (catalog_name(c) == name) return c;
    }
    throw std::invalid_argument("unknown catalog: " + std::string(name));
}

struct Catalog {
    CatalogName name;
    std::vector<FiberType> types;
    std::string normalization_exponent_note;

    const FiberType* find(FiberLabel label) const {
        auto it = std::find_if(types.begin(), types.end(), [&](const FiberType& t) { return t.label == label; });
        return it == types.end() ? nullptr : &*it;
    }

    const FiberType& at(FiberLabel label) const {
        if (const FiberType* t = find(label)) return *t;
        throw std::out_of_range("catalog " + std::string(catalog_name(name)) + " has no type " +
                                std::string(label_name(label)));
    }
};

/**
 * Fiber-type catalogs for minimal elliptic surfaces over P^1 (full case)
 * and for generalized elliptic curves with Gamma_1(N)-structure, N = 2, 3, 4.
 *
 * Each motive is the one-fiber class divided by {PGL_2} * L^(normalization),
 * the normalization being recorded in normalization_exponent_note.
 * Rows appear in table order.
 */
inline Catalog catalog(CatalogName name) {
    using enum FiberLabel;
    auto L = [](int e) { return lefschetz_monomial(e); };
    Catalog c{name, {}, {}};
    switch (name) {
        case CatalogName::full:
            c.normalization_exponent_note = "A = {W_n^Theta} / ({PGL_2} L^(10n-18))";
            c.types = {
                make_fiber_type(ICusp, L(16)),          make_fiber_type(II, L(15)),
                make_fiber_type(III, L(14)),            make_fiber_type(IV, L(13)),
                make_fiber_type(IStarCusp, L(12) - L(11)), make_fiber_type(I0StarGenericJ, L(12) - L(11)),
                make_fiber_type(I0StarSpecialJ, L(11)), make_fiber_type(IVStar, L(10)),
                make_fiber_type(IIIStar, L(9)),         make_fiber_type(IIStar, L(8)),
            };
            break;
        case CatalogName::gamma1_2:
            c.normalization_exponent_note = "A = {W_n^(Gamma_1(2),Theta)} / ({PGL_2} L^(6n-10))";
            c.types = {
                make_fiber_type(ICusp, L(8)),
                make_fiber_type(III, L(7)),
                make_fiber_type(IStarCusp, L(6) - L(5)),
                make_fiber_type(I0StarGenericJ, L(6) - L(5)),
                make_fiber_type(I0StarSpecialJ, L(5)),
                make_fiber_type(IIIStar, L(4)),
            };
            break;
        case CatalogName::gamma1_3:
            c.normalization_exponent_note = "A = {W_n^(Gamma_1(3),Theta)} / ({PGL_2} L^(4n-6))";
            c.types = {
                make_fiber_type(ICusp, L(4)),
                make_fiber_type(IV, L(3)),
                make_fiber_type(IVStar, L(2)),
            };
            break;
        case CatalogName::gamma1_4:
            // The level-4 I0* row lies over j = 0, so it takes the special-j inertia label.
            c.normalization_exponent_note = "A = {W_n^(Gamma_1(4),Theta)} / ({PGL_2} L^(3n-4))";
            c.types = {
                make_fiber_type(ICusp, L(2)),
                make_fiber_type(I0StarSpecialJ, L(1)),
            };
            break;
    }
    return c;
}

inline Catalog catalog(std::string_view name) { return catalog(parse_catalog_name(name)); }

/// One singular fiber: a label and, for the cusp families, its contact order k >= 1.
struct FiberEntry {
    FiberLabel label;
    int k = 1;

    friend constexpr bool operator==(const FiberEntry&, const FiberEntry&) = default;
    friend constexpr auto operator<=>(const FiberEntry&, const FiberEntry&) = default;
};

inline std::string entry_name(const FiberEntry& e) {
    switch (e.label) {
        case FiberLabel::ICusp: return "I" + std::to_string(e.k);
        case FiberLabel::IStarCusp: return "I" + std::to_string(e.k) + "*";
        default: return std::string(label_name(e.label));
    }
}

/// m_v - 1 for one fiber.
inline int components_minus_one(const FiberEntry& e) {
    return kodaira_symbol(e.label).components_minus_one.at(is_cusp_label(e.label) ? e.k : 0);
}

inline int disc_valuation(const FiberEntry& e) {
    return kodaira_symbol(e.label).disc_valuation.at(is_cusp_label(e.label) ? e.k : 0);
}

/**
 * Euler number of the fiber, from its component count: a fiber of
 * multiplicative type I_k has e = m_v, an additive fiber has e = m_v + 1.
 */
inline int euler_number(const FiberEntry& e) {
    const int components = components_minus_one(e) + 1;
    return kodaira_symbol(e.label).reduction == Reduction::multiplicative ? components : components + 1;
}

/// A finite multiset of singular fibers, kept sorted.
class FiberConfiguration {
public:
    FiberConfiguration() = default;

    explicit FiberConfiguration(std::vector<FiberEntry> entries) : entries_(std::move(entries)) {
        for (auto& e : entries_) {
            if (is_cusp_label(e.label)) {
                if (e.k < 1) throw std::invalid_argument("cusp contact order must be >= 1");
            } else {
                e.k = 1;
            }
        }
        std::sort(entries_.begin(), entries_.end());
    }

    const std::vector<FiberEntry>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    int total_disc_valuation() const {
        int total = 0;
        for (const auto& e : entries_) total += disc_valuation(e);
        return total;
    }

    std::optional<int> max_contact_order() const {
        std::optional<int> best;
        for (const auto& e : entries_) {
            if (is_cusp_label(e.label) && (!best || e.k > *best)) best = e.k;
        }
        return best;
    }

    std::string to_string() const {
        if (entries_.empty()) return "{}";
        std::string s;
        for (const auto& e : entries_) {
            if (!s.empty()) s += "+";
            s += entry_name(e);
        }
        return s;
    }

    friend bool operator==(const FiberConfiguration&, const FiberConfiguration&) = default;

private:
    std::vector<FiberEntry> entries_;
};

/// T(S) = 2 + sum over fibers of (m_v - 1).
inline int trivial_lattice_rank(const FiberConfiguration& c) {
    int t = 2;
    for (const auto& e : c.entries()) t += components_minus_one(e);
    return t;
}

/**
 * True when the configuration has discriminant degree 12n with n >= 1 and
 * T > 10n, i.e. it violates the Lefschetz-type bound T(S) <= 10n.
 */
inline bool exceeds_lefschetz_bound(const FiberConfiguration& c) {
    const int degree = c.total_disc_valuation();
    if (degree <= 0 || degree % 12 != 0) return false;
    return trivial_lattice_rank(c) > 10 * (degree / 12);
}

/**
 * Every multiset of catalog fibers with total discriminant valuation
 * exactly `degree`, each exactly once.
 *
 * The catalog is flattened into slots (one per non-cusp type, one per
 * (cusp type, k) with v(k) <= degree) in catalog order, and multiplicities
 * are chosen slot by slot, so the output order is deterministic.
 */
inline std::vector<FiberConfiguration> enumerate_configurations(const Catalog& cat, int degree) {
    if (degree < 0) throw std::invalid_argument("discriminant degree must be >= 0");
    std::vector<FiberEntry> slots;
    for (const auto& t : cat.types) {
        if (t.is_cusp_family) {
            for (int k = 1; t.disc_valuation.at(k) <= degree; ++k) slots.push_back({t.label, k});
        } else if (t.disc_valuation.at(0) <= degree) {
            slots.push_back({t.label, 1});
        }
    }

    std::vector<FiberConfiguration> out;
    std::vector<FiberEntry> current;
    auto recurse = [&](auto&& self, std::size_t slot, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (slot == slots.size()) return;
        const int size = disc_valuation(slots[slot]);
        const std::size_t mark = current.size();
        for (int used = 0; used * size <= remaining; ++used) {
            self(self, slot + 1, remaining - used * size);
            current.push_back(slots[slot]);
        }
        current.resize(mark);
    };
    recurse(recurse, 0, degree);
    return out;
}

}  // namespace ztriv
