#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ztriv {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// Rationals print as "p/q", or "p" when the denominator is one.
inline std::string to_decimal(const BigRational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline BigInt parse_bigint(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("empty integer literal");
    for (char ch : digits) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("invalid integer literal: " + std::string(text));
    }
    if (text.front() == '+') text.remove_prefix(1);
    return BigInt(std::string(text));
}

/// Accepts "p", "-p" or "p/q" with q nonzero.
inline BigRational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal: " + std::string(text));
    return BigRational(num, den);
}

inline BigRational pow(const BigRational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("division by zero: negative power of zero");
        return pow(BigRational(1) / base, -exponent);
    }
    BigRational result = 1;
    BigRational factor = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1u) result *= factor;
        if (e > 1) factor *= factor;
    }
    return result;
}

}  // namespace ztriv
