#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "modvar/defs.hpp"

namespace modvar {

/// Exact rational number with int64 numerator/denominator, always normalized
/// (den > 0, gcd(|num|, den) == 1). Comparisons and arithmetic are exact;
/// intermediate products run through 128-bit integers and overflow throws.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);
    static Rational integer(std::int64_t n) { return Rational(n, 1); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// True iff k * (num/den) is an integer.
    bool integral_multiple(std::int64_t k) const;

    /// Parses "p/q" or "p". Whitespace is not accepted.
    static Rational parse(std::string_view text);

    /// Canonical form: "p" when den == 1, else "p/q".
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }

    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator+(const Rational& a, const Rational& b);
};

} // namespace modvar
