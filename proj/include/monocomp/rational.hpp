#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace monocomp {

/**
 * Exact rational number on 64-bit numerator/denominator.
 *
 * Always normalized: den > 0, gcd(|num|, den) = 1. All arithmetic runs
 * through 128-bit intermediates and throws std::overflow_error if a reduced
 * result no longer fits in 64 bits. Comparisons are exact (cross
 * multiplication in 128 bits), so threshold checks with equality never
 * depend on floating-point rounding.
 */
struct Rational {
    long long num{0};
    long long den{1};

    constexpr Rational() = default;
    constexpr Rational(long long value) : num(value), den(1) {}
    Rational(long long n, long long d) { *this = make(n, d); }

    static Rational make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lo = -__int128(0x7fffffffffffffffLL) - 1;
        constexpr __int128 hi = __int128(0x7fffffffffffffffLL);
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational: value exceeds 64-bit range");
        Rational r;
        r.num = static_cast<long long>(n);
        r.den = static_cast<long long>(d);
        return r;
    }

    friend Rational operator+(Rational a, Rational b) {
        return make(__int128(a.num) * b.den + __int128(b.num) * a.den,
                    __int128(a.den) * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return make(__int128(a.num) * b.den - __int128(b.num) * a.den,
                    __int128(a.den) * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return make(__int128(a.num) * b.num, __int128(a.den) * b.den);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw std::domain_error("rational: division by zero");
        return make(__int128(a.num) * b.den, __int128(a.den) * b.num);
    }
    friend Rational operator-(Rational a) { return make(-__int128(a.num), a.den); }

    friend bool operator==(Rational a, Rational b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(Rational a, Rational b) {
        __int128 l = __int128(a.num) * b.den;
        __int128 r = __int128(b.num) * a.den;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// "num/den", e.g. "4/29"; integers render without the denominator.
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    static constexpr __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
};

/// Parses "3", "-1/6" or a plain decimal like "0.05" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(text.substr(0, slash));
        long long d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    }
    bool neg = false;
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    __int128 num = 0;
    __int128 den = 1;
    bool seen_digit = false;
    bool after_point = false;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '.') {
            if (after_point) throw std::invalid_argument("rational: bad literal '" + text + "'");
            after_point = true;
            continue;
        }
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("rational: bad literal '" + text + "'");
        num = num * 10 + (ch - '0');
        if (after_point) den *= 10;
        seen_digit = true;
        if (den > __int128(1000000000000000000LL))
            throw std::overflow_error("rational: literal too precise '" + text + "'");
    }
    if (!seen_digit) throw std::invalid_argument("rational: bad literal '" + text + "'");
    return Rational::make(neg ? -num : num, den);
}

}  // namespace monocomp
