#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/cube.hpp"
#include "latpoly/cubic.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

/// One exact comparison inside an identity report. Informational checks
/// (asserted = false) are printed but never gate success.
struct IdentityCheck {
    std::string name;
    Rational expected;
    Rational actual;
    bool asserted = true;

    bool pass() const { return expected == actual; }
};

struct IdentityReport {
    std::string subject;
    std::vector<IdentityCheck> checks;

    bool all_asserted_pass() const;
};

/// Stable one-line identifier for a cube, used as report subject.
std::string cube_id(const CubeMatrix& c);

/// Expanded form of (ell*t + 1) * (ell^2*t^2 + (d1+d2+d3-ell)*t + 1):
/// ell^3 t^3 + ell*(d1+d2+d3) t^2 + (d1+d2+d3) t + 1.
EhrhartCubic cube_closed_form(const CubeMatrix& c);

/// (lambda1, lambda2) = (ell * (d1+d2+d3), d1+d2+d3).
std::pair<Int, Int> lambda_coefficients(const CubeMatrix& c);

/// (mu1, nu1) = (ell * (D1+D2+D3+D4) / 4, 2 * mu1), exact rationals.
std::pair<Rational, Rational> mu1_nu1(const CubeMatrix& c);

/// Unique cubic through four (t, count) points, solved over exact rationals.
/// Throws std::invalid_argument on repeated t (singular system).
EhrhartCubic fit_cubic(const std::array<std::pair<Int, Int>, 4>& counts);

/// Counts P at t = 1..4 and fits. The constant term and leading coefficient
/// are NOT constrained by the fit, so they double as sanity checks.
EhrhartCubic fit_from_counts(const LatticePolytope& p, unsigned threads = 0);

struct TetraOctaPolys {
    EhrhartCubic tetra;
    EhrhartCubic octa;
};

/// Brute-force fits for T and O of the cube. Postconditions checked: leading
/// coefficients ell^3/3 and 4*ell^3/3, constant terms 1, and the t^2
/// coefficients match mu1_nu1; any failure throws std::logic_error since it
/// signals a counting or fitting bug.
TetraOctaPolys tetra_octa_polynomials(const CubeMatrix& c, unsigned threads = 0);

/// Reports (a) nu2 + 2*mu2 from the fitted polynomials against (b) 6 + tau
/// (asserted) and against (c) the six-divisor sum d1+d2+d3 (row gcds) plus
/// gcd(a-b), gcd(a-c), gcd(c-b) read literally (informational only: (c)
/// disagrees with (a) for some cubes, e.g. the side-5 Pythagorean cube).
IdentityReport mu2_nu2_relation(const CubeMatrix& c, unsigned threads = 0);

/// Reciprocity: for t = 1..t_max asserts interior(t * P) = -L(-t) exactly.
IdentityReport reciprocity_check(const LatticePolytope& p, const EhrhartCubic& L,
                                 Int t_max, unsigned threads = 0);

/// Asserts L(C,1) <= (ell+1)^3, with equality exactly when C is equivalent
/// to ell times the unit cube.
IdentityReport max_count_bound(const CubeMatrix& c);

}  // namespace latpoly
