#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "latpoly/exact.hpp"

namespace latpoly {

inline Wide wide_abs(Wide a) { return a < 0 ? -a : a; }

inline Wide wide_gcd(Wide a, Wide b) {
    unsigned __int128 x = a < 0 ? -static_cast<unsigned __int128>(a) : static_cast<unsigned __int128>(a);
    unsigned __int128 y = b < 0 ? -static_cast<unsigned __int128>(b) : static_cast<unsigned __int128>(b);
    while (y != 0) {
        unsigned __int128 t = x % y;
        x = y;
        y = t;
    }
    return static_cast<Wide>(x);
}

inline Wide wide_checked_add(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("rational add");
    return r;
}

inline Wide wide_checked_mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("rational mul");
    return r;
}

inline std::string wide_str(Wide v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (m != 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    return neg ? "-" + s : s;
}

/// Exact rational over 128-bit integers, always stored reduced with a
/// positive denominator. Equality is structural.
struct Rational {
    Wide num{0};
    Wide den{1};

    Rational() = default;
    Rational(Int n) : num(n) {}
    Rational(Wide n, Wide d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (num == 0) {
            den = 1;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Wide g = wide_gcd(num, den);
        num /= g;
        den /= g;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    Int as_int() const {
        if (den != 1) throw std::domain_error("rational is not an integer: " + str());
        return narrow(num, "as_int");
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Wide lhs = wide_checked_mul(a.num, b.den);
        Wide rhs = wide_checked_mul(b.num, a.den);
        return lhs <=> rhs;
    }

    Rational operator-() const {
        Rational r = *this;
        r.num = -r.num;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(wide_checked_add(wide_checked_mul(a.num, b.den), wide_checked_mul(b.num, a.den)),
                        wide_checked_mul(a.den, b.den));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(wide_checked_mul(a.num, b.num), wide_checked_mul(a.den, b.den));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return Rational(wide_checked_mul(a.num, b.den), wide_checked_mul(a.den, b.num));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const {
        if (den == 1) return wide_str(num);
        return wide_str(num) + "/" + wide_str(den);
    }
};

}  // namespace latpoly
