#pragma once

#include <optional>
#include <string>

#include "latpoly/rational.hpp"

namespace latpoly {

/// Degree-3 polynomial c3*t^3 + c2*t^2 + c1*t + c0 with exact rational
/// coefficients.
struct EhrhartCubic {
    Rational c3, c2, c1, c0;

    friend bool operator==(const EhrhartCubic&, const EhrhartCubic&) = default;
    friend std::strong_ordering operator<=>(const EhrhartCubic& a, const EhrhartCubic& b) {
        if (auto c = a.c3 <=> b.c3; c != 0) return c;
        if (auto c = a.c2 <=> b.c2; c != 0) return c;
        if (auto c = a.c1 <=> b.c1; c != 0) return c;
        return a.c0 <=> b.c0;
    }

    /// Exact Horner evaluation at an integer point.
    Rational eval(Int t) const {
        Rational r = c3;
        r = r * Rational(t) + c2;
        r = r * Rational(t) + c1;
        r = r * Rational(t) + c0;
        return r;
    }

    std::string str() const {
        return c3.str() + "*t^3 + " + c2.str() + "*t^2 + " + c1.str() + "*t + " + c0.str();
    }
};

/// Expand (ell*t + 1) * (ell^2*t^2 + alpha*t + 1).
inline EhrhartCubic factored_cube_form(Int ell, Int alpha) {
    Rational l(ell), a(alpha);
    return {l * l * l, a * l + l * l, l + a, Rational(1)};
}

struct Quadratic {
    Rational a, b, c;  // a*t^2 + b*t + c
};

/// Exact division by (ell*t + 1); nullopt when the remainder is nonzero.
inline std::optional<Quadratic> divide_by_linear(const EhrhartCubic& p, Int ell) {
    Rational l(ell);
    Quadratic q;
    q.a = p.c3 / l;
    q.b = (p.c2 - q.a) / l;
    q.c = (p.c1 - q.b) / l;
    if (p.c0 - q.c != Rational(0)) return std::nullopt;
    return q;
}

}  // namespace latpoly
