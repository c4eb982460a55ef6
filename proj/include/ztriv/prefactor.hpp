#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ztriv/algebra.hpp"

namespace ztriv {

/**
 * Parses a prefactor expression such as "u^2*L", "u^2", "u^2*(L^12-L^11)"
 * or "3*u*L^-1" into a LatticePoly.
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := factor ('*' factor)*
 *   factor  := '-' factor | primary ('^' ['-'] digits)?
 *   primary := digits | 'u' | 'L' | '(' expr ')'
 *
 * Negative powers are accepted only for monomials in L.
 */
class PrefactorParser {
public:
    explicit PrefactorParser(std::string_view text) : text_(text) {}

    LatticePoly parse() {
        LatticePoly value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("bad prefactor \"" + std::string(text_) + "\" at position " + std::to_string(pos_) +
                                    ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    LatticePoly expr() {
        LatticePoly value = term();
        while (true) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    LatticePoly term() {
        LatticePoly value = factor();
        while (accept('*')) value *= factor();
        return value;
    }

    LatticePoly factor() {
        if (accept('-')) return -factor();
        LatticePoly base = primary();
        if (!accept('^')) return base;
        const bool negative = accept('-');
        const std::string d = digits();
        if (d.size() > 6) fail("exponent too large");
        const int e = std::stoi(d);
        return negative ? inverse_power(base, e) : positive_power(base, e);
    }

    LatticePoly primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char ch = text_[pos_];
        if (ch == 'u') {
            ++pos_;
            return lattice_monomial(1, LefschetzPoly::one());
        }
        if (ch == 'L') {
            ++pos_;
            return lattice_constant(lefschetz_monomial(1));
        }
        if (ch == '(') {
            ++pos_;
            LatticePoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return lattice_constant(lefschetz_constant(BigInt(digits())));
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    static LatticePoly positive_power(const LatticePoly& base, int e) {
        LatticePoly r = LatticePoly::one();
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    }

    LatticePoly inverse_power(const LatticePoly& base, int e) {
        const bool l_monomial = base.size() == 1 && base.terms().front().first == 0 &&
                                base.terms().front().second.size() == 1 &&
                                base.terms().front().second.terms().front().second == 1;
        if (!l_monomial) fail("negative powers are only defined for monomials in L");
        const int l_exp = base.terms().front().second.terms().front().first;
        return lattice_constant(lefschetz_monomial(-l_exp * e));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline LatticePoly parse_prefactor(std::string_view text) { return PrefactorParser(text).parse(); }

}  // namespace ztriv
