#include "latpoly/plane_basis.hpp"

#include <stdexcept>

namespace latpoly {

BezoutResult extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        Int tmp = old_r - checked_mul(q, r);
        old_r = r;
        r = tmp;
        tmp = old_s - checked_mul(q, s);
        old_s = s;
        s = tmp;
        tmp = old_t - checked_mul(q, t);
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_s = checked_neg(old_s);
        old_t = checked_neg(old_t);
    }
    return {old_r, old_s, old_t};
}

Int fundamental_area_sq(Int a, Int b, Int c) {
    if (gcd3(a, b, c) != 1)
        throw std::invalid_argument("fundamental_area_sq: normal must be primitive");
    return norm_sq({a, b, c});
}

PlaneBasis plane_basis(Int a, Int b, Int c) {
    if (gcd3(a, b, c) != 1)
        throw std::invalid_argument("plane_basis: normal must be primitive");

    // Coordinate planes: the cyclic pairs keep cross(u, tau) = +-normal.
    if (a == 0 && b == 0) return {{a, b, c}, {1, 0, 0}, {0, 1, 0}};
    if (b == 0 && c == 0) return {{a, b, c}, {0, 1, 0}, {0, 0, 1}};
    if (a == 0 && c == 0) return {{a, b, c}, {0, 0, 1}, {1, 0, 0}};

    const auto [w, k, l] = extended_gcd(a, b);
    const IntVec3 u = {-b / w, a / w, 0};
    const IntVec3 tau = {checked_neg(checked_mul(k, c)), checked_neg(checked_mul(l, c)), w};
    // cross(u, tau) = (a, b, (k*a + l*b) * c / w) = the normal itself.
    return {{a, b, c}, u, tau};
}

}  // namespace latpoly
