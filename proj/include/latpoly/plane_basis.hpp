#pragma once

#include "latpoly/exact.hpp"

namespace latpoly {

/// Basis (u, tau) of the lattice of integer points in the plane through the
/// origin with primitive normal (a, b, c): every lattice point of the plane
/// is an integer combination x*u + y*tau, and |u x tau|^2 = a^2 + b^2 + c^2.
struct PlaneBasis {
    IntVec3 normal;
    IntVec3 u;
    IntVec3 tau;
};

/// Computes the basis. Requires gcd(a, b, c) = 1.
///
/// When two of the components are zero the plane is a coordinate plane and
/// the two spanning unit vectors are returned. Otherwise u = (-b, a, 0) / w
/// and tau = (-k*c, -l*c, w) where w = gcd(a, b) and k*a + l*b = w.
PlaneBasis plane_basis(Int a, Int b, Int c);

/// Squared area of the fundamental domain: a^2 + b^2 + c^2.
Int fundamental_area_sq(Int a, Int b, Int c);

/// Bezout data: k*a + l*b = g = gcd(a, b), g >= 0 (g = 0 iff a = b = 0).
struct BezoutResult {
    Int g;
    Int k;
    Int l;
};

BezoutResult extended_gcd(Int a, Int b);

}  // namespace latpoly
