#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dstokes {

/// Exact rational number over int64 with checked arithmetic.
/// All quantities in this library are desk-scale (denominators are small
/// powers of two, numerators bounded by small polynomial values), so a
/// fixed-width representation is enough; any overflow throws instead of
/// wrapping.
struct Rational {
    long long num = 0;
    long long den = 1;

    constexpr Rational() = default;
    constexpr Rational(long long v) : num(v), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0)
            throw std::domain_error("rational: zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0)
            den = 1;
    }

    bool is_integer() const { return den == 1; }

    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("rational: multiply overflow");
        return r;
    }
    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("rational: add overflow");
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)),
                        checked_mul(a.den, b.den));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0)
            throw std::domain_error("rational: division by zero");
        return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
};

inline Rational abs(const Rational& r) { return r.num < 0 ? -r : r; }

inline Rational pow(Rational x, int e) {
    if (e < 0) {
        x = Rational(1) / x;
        e = -e;
    }
    Rational r(1);
    while (e > 0) {
        if (e & 1)
            r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

/// Parses "n" or "n/d" (optional leading '-').
inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(std::stoll(std::string(s)));
        return Rational(std::stoll(std::string(s.substr(0, slash))),
                        std::stoll(std::string(s.substr(slash + 1))));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: cannot parse '" + std::string(s) + "'");
    }
}

inline Rational half(long long n) { return Rational(n, 2); }

} // namespace dstokes
