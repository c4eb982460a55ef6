#pragma once

#include <string>

#include "ztriv/algebra.hpp"

namespace ztriv {

namespace detail {

template <class Num>
std::string signed_term(const Num& c, const std::string& var, bool first) {
    const bool negative = c < 0;
    const Num magnitude = negative ? Num(-c) : c;
    std::string body;
    if (var.empty()) {
        body = to_decimal(magnitude);
    } else if (magnitude == 1) {
        body = var;
    } else {
        body = to_decimal(magnitude) + "*" + var;
    }
    if (first) return negative ? "-" + body : body;
    return (negative ? " - " : " + ") + body;
}

inline std::string power_name(const char* var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

}  // namespace detail

/// e.g. "L^11 - L^12 + 3", ascending in L.
template <class Num>
std::string format_lefschetz(const SparsePoly<Num, LaurentExponents>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        out += detail::signed_term(c, detail::power_name("L", e), first);
        first = false;
    }
    return out;
}

/// e.g. "u^2*L + u^3*(L^17 + L^18)", ascending in u.
template <class Num>
std::string format_lattice(const SparsePoly<SparsePoly<Num, LaurentExponents>, NonNegativeExponents>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [u, lef] : p.terms()) {
        if (!out.empty()) out += " + ";
        const std::string inner = format_lefschetz(lef);
        const bool compound = lef.size() > 1 || inner.front() == '-';
        if (u == 0) {
            out += compound ? "(" + inner + ")" : inner;
        } else if (inner == "1") {
            out += detail::power_name("u", u);
        } else {
            out += detail::power_name("u", u) + "*" + (compound ? "(" + inner + ")" : inner);
        }
    }
    return out;
}

}  // namespace ztriv
