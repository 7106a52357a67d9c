#pragma once

#include <array>
#include <string>

#include "latpoly/exact.hpp"

namespace latpoly {

/// A lattice cube of side ell, encoded by the integer matrix whose rows are
/// the three edge vectors from one vertex: m * m^T = ell^2 * I.
class CubeMatrix {
public:
    /// Validates orthogonality and equal row norms, infers ell.
    /// Throws std::invalid_argument when the rows do not span a cube.
    static CubeMatrix from_rows(const IntMat3& m);

    /// Cube from the four-parameter rational orthogonal matrix, scaled to
    /// integers and reduced by the common gcd of the entries and the scale.
    static CubeMatrix rodrigues(Int a, Int b, Int c, Int d);

    /// Cube with rows (a,b,0), (-b,a,0), (0,0,c) for a primitive
    /// Pythagorean triple a^2 + b^2 = c^2.
    static CubeMatrix pythagorean(Int a, Int b, Int c);

    const IntMat3& rows() const { return m_; }
    Int side() const { return side_; }

    IntVec3 alpha() const { return m_.row[0]; }
    IntVec3 beta() const { return m_.row[1]; }
    IntVec3 gamma() const { return m_.row[2]; }

    /// The cube k*m of side k*ell.
    CubeMatrix scaled(Int k) const;

    friend bool operator==(const CubeMatrix&, const CubeMatrix&) = default;
    friend auto operator<=>(const CubeMatrix& a, const CubeMatrix& b) {
        return flatten(a.m_) <=> flatten(b.m_);
    }

private:
    CubeMatrix(const IntMat3& m, Int side) : m_(m), side_(side) {}

    IntMat3 m_;
    Int side_;
};

/// All gcd invariants of a cube, computed on rows alpha, beta, gamma.
struct DivisorProfile {
    std::array<Int, 3> d;        // row gcds d1..d3
    std::array<Int, 3> d_prime;  // ell / d_i
    std::array<Int, 4> D;        // gcds of a+b+c, a+b-c, a-b+c, -a+b+c
    std::array<Int, 6> e;        // gcds of a+b, b+c, c+a, a-b, b-c, c-a
    std::array<Int, 3> col;      // column gcds

    Int d_sum() const { return d[0] + d[1] + d[2]; }
    Int D_sum() const { return D[0] + D[1] + D[2] + D[3]; }
    Int col_sum() const { return col[0] + col[1] + col[2]; }
};

DivisorProfile divisor_profile(const CubeMatrix& c);

/// Signed permutation: maps v to w with w[i] = sign[i] * v[perm[i]].
struct SignedPerm {
    std::array<int, 3> perm;
    std::array<Int, 3> sign;

    IntVec3 apply(const IntVec3& v) const {
        const Int comp[3] = {v.x, v.y, v.z};
        return {sign[0] * comp[perm[0]], sign[1] * comp[perm[1]], sign[2] * comp[perm[2]]};
    }
};

/// The 48 signed permutation matrices (orthogonal with entries 0, +-1).
const std::array<SignedPerm, 48>& signed_perm_group();

/// Lexicographically smallest matrix in the two-sided orbit
/// {P * m * Q : P, Q signed permutations}; a complete class invariant.
CubeMatrix canonicalize(const CubeMatrix& c);

bool is_canonical(const CubeMatrix& c);

/// True iff the gcd of all nine entries is 1.
bool is_irreducible(const CubeMatrix& c);

/// True iff m^T lies in the two-sided orbit of m, i.e. the cube and its
/// inverse (ell^2 * m^-1 = m^T) represent equivalent cubes.
bool is_self_dual(const CubeMatrix& c);

/// "a,b,c;d,e,f;g,h,i" row-major matrix text, also the CLI flag syntax.
std::string rows_str(const IntMat3& m);
IntMat3 parse_rows(const std::string& text);  // throws std::invalid_argument

}  // namespace latpoly
