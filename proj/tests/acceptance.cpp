// Acceptance gate: one line per criterion, exact integer/rational equality
// throughout, nonzero exit iff any criterion fails.
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "latpoly/catalog.hpp"
#include "latpoly/cli.hpp"
#include "latpoly/counting.hpp"
#include "latpoly/cube.hpp"
#include "latpoly/ehrhart.hpp"

using namespace latpoly;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << '\n';
    if (!pass) ++g_failures;
}

double run_timed(int criterion, const std::string& what, double budget_seconds,
                 const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (pass && budget_seconds > 0 && elapsed >= budget_seconds) {
        pass = false;
        std::ostringstream os;
        os << "runtime " << elapsed << "s exceeds budget " << budget_seconds << "s";
        detail = os.str();
    }
    report(criterion, what, pass, detail);
    return elapsed;
}

CubeMatrix rows(Int a1, Int a2, Int a3, Int b1, Int b2, Int b3, Int c1, Int c2, Int c3) {
    return CubeMatrix::from_rows({{IntVec3{a1, a2, a3}, IntVec3{b1, b2, b3},
                                   IntVec3{c1, c2, c3}}});
}

struct Golden {
    const char* name;
    CubeMatrix cube;
    EhrhartCubic poly;
};

EhrhartCubic cubic(Rational c3, Rational c2, Rational c1, Rational c0) {
    return {c3, c2, c1, c0};
}

std::vector<Golden> golden_cubes() {
    return {
        {"C3", rows(-1, 2, 2, 2, -1, 2, 2, 2, -1),
         cubic(Rational(27), Rational(9), Rational(3), Rational(1))},
        {"C5", rows(4, 3, 0, 3, -4, 0, 0, 0, 5),
         cubic(Rational(125), Rational(35), Rational(7), Rational(1))},
        {"C7", rows(-2, 6, 3, 3, -2, 6, 6, 3, -2),
         cubic(Rational(343), Rational(21), Rational(3), Rational(1))},
        {"C9", rows(7, 4, -4, 4, 1, 8, -4, 8, 1),
         cubic(Rational(729), Rational(27), Rational(3), Rational(1))},
        {"C11", rows(2, 9, 6, 9, 2, -6, 6, -6, 7),
         cubic(Rational(1331), Rational(33), Rational(3), Rational(1))},
        {"C13", rows(-3, 12, 4, 4, -3, 12, 12, 4, -3),
         cubic(Rational(2197), Rational(39), Rational(3), Rational(1))},
        {"C13_hat", rows(5, 12, 0, 12, -5, 0, 0, 0, 13),
         cubic(Rational(2197), Rational(195), Rational(15), Rational(1))},
    };
}

std::string mismatch(const char* name, const EhrhartCubic& want, const EhrhartCubic& got) {
    std::ostringstream os;
    os << name << ": expected " << want.str() << ", got " << got.str();
    return os.str();
}

// Everything measured once per cataloged cube; criteria 4, 5, 6 and 9 read it.
struct VerifiedCube {
    CubeMatrix cube;
    EhrhartCubic cube_fit;
    EhrhartCubic tetra1_fit;
    EhrhartCubic tetra2_fit;
    EhrhartCubic octa_fit;
    std::array<std::array<Int, 3>, 4> interiors;  // shape x t for t = 1..3
    Int tau;
    Int half_open;
};

VerifiedCube measure_cube(const CubeMatrix& c) {
    VerifiedCube v{c, {}, {}, {}, {}, {}, 0, 0};
    const LatticePolytope shapes[4] = {cube_polytope(c), tetrahedron_of(c, 1),
                                       tetrahedron_of(c, 2), octahedron_of(c)};
    for (int s = 0; s < 4; ++s) {
        std::array<std::pair<Int, Int>, 4> pts;
        for (Int t = 1; t <= 4; ++t) {
            const CountResult r = count(shapes[s], t);
            pts[static_cast<std::size_t>(t - 1)] = {t, r.closed};
            if (t <= 3)
                v.interiors[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - 1)] =
                    r.interior;
        }
        const EhrhartCubic fit = fit_cubic(pts);
        if (s == 0) v.cube_fit = fit;
        if (s == 1) v.tetra1_fit = fit;
        if (s == 2) v.tetra2_fit = fit;
        if (s == 3) v.octa_fit = fit;
    }
    v.tau = boundary_edge_interior_count(shapes[1]);
    v.half_open = count_half_open_cube(c);
    return v;
}

}  // namespace

int main() {
    std::vector<VerifiedCube> catalog13;  // filled under criterion 4

    run_timed(1, "golden cube polynomials, brute-force fit and closed form", 60.0,
              [](std::string& detail) {
                  for (const Golden& g : golden_cubes()) {
                      const EhrhartCubic fit = fit_from_counts(cube_polytope(g.cube));
                      if (fit != g.poly) {
                          detail = mismatch(g.name, g.poly, fit);
                          return false;
                      }
                      const EhrhartCubic closed = cube_closed_form(g.cube);
                      if (closed != g.poly) {
                          detail = mismatch(g.name, g.poly, closed);
                          return false;
                      }
                  }
                  return true;
              });

    run_timed(2, "Pythagorean cubes fit (c*t+1)(c^2*t^2+2t+1)", 0,
              [](std::string& detail) {
                  const std::array<std::array<Int, 3>, 3> triples = {
                      {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}}};
                  for (const auto& tr : triples) {
                      const Int c = tr[2];
                      const CubeMatrix cube = CubeMatrix::pythagorean(tr[0], tr[1], tr[2]);
                      const EhrhartCubic want =
                          cubic(Rational(static_cast<Wide>(c) * c * c),
                                Rational(c * (c + 2)), Rational(c + 2), Rational(1));
                      const EhrhartCubic fit = fit_from_counts(cube_polytope(cube));
                      if (fit != want) {
                          detail = mismatch("pythagorean", want, fit);
                          return false;
                      }
                  }
                  return true;
              });

    run_timed(3, "tetrahedron and octahedron golden polynomials", 0,
              [](std::string& detail) {
                  struct Row {
                      const char* name;
                      CubeMatrix cube;
                      EhrhartCubic tetra;
                      EhrhartCubic octa;
                  };
                  const std::vector<Row> table = {
                      {"ell=1", rows(1, 0, 0, 0, 1, 0, 0, 0, 1),
                       cubic(Rational(1, 3), Rational(1), Rational(5, 3), Rational(1)),
                       cubic(Rational(4, 3), Rational(2), Rational(8, 3), Rational(1))},
                      {"ell=3", rows(-1, 2, 2, 2, -1, 2, 2, 2, -1),
                       cubic(Rational(9), Rational(9, 2), Rational(13, 2), Rational(1)),
                       cubic(Rational(36), Rational(9), Rational(-1), Rational(1))},
                      {"ell=5", rows(4, 3, 0, 3, -4, 0, 0, 0, 5),
                       cubic(Rational(125, 3), Rational(5), Rational(1, 3), Rational(1)),
                       cubic(Rational(500, 3), Rational(10), Rational(16, 3), Rational(1))},
                  };
                  for (const Row& r : table) {
                      const EhrhartCubic t = fit_from_counts(tetrahedron_of(r.cube, 1));
                      if (t != r.tetra) {
                          detail = mismatch(r.name, r.tetra, t);
                          return false;
                      }
                      const EhrhartCubic o = fit_from_counts(octahedron_of(r.cube));
                      if (o != r.octa) {
                          detail = mismatch(r.name, r.octa, o);
                          return false;
                      }
                  }
                  return true;
              });

    run_timed(4, "coefficient identities over the full catalog up to ell=13", 0,
              [&catalog13](std::string& detail) {
                  for (Int ell = 1; ell <= 13; ell += 2)
                      for (const CubeMatrix& c : cubes_of_side(ell))
                          catalog13.push_back(measure_cube(c));
                  if (catalog13.size() != 8) {
                      detail = "expected 8 cataloged cubes";
                      return false;
                  }
                  for (const VerifiedCube& v : catalog13) {
                      const Int ell = v.cube.side();
                      const DivisorProfile p = divisor_profile(v.cube);
                      const auto [l1, l2] = lambda_coefficients(v.cube);
                      const auto [mu1, nu1] = mu1_nu1(v.cube);
                      const bool ok =
                          l1 == ell * p.d_sum() && l2 == p.d_sum() &&
                          v.cube_fit.c2 == Rational(l1) && v.cube_fit.c1 == Rational(l2) &&
                          v.tetra1_fit.c2 == mu1 && v.octa_fit.c2 == nu1 &&
                          nu1 == mu1 + mu1 &&
                          mu1 == Rational(static_cast<Wide>(ell) * p.D_sum(), 4) &&
                          v.octa_fit.c1 + v.tetra1_fit.c1 + v.tetra1_fit.c1 ==
                              Rational(6 + v.tau);
                      if (!ok) {
                          detail = "violation at " + cube_id(v.cube);
                          return false;
                      }
                  }
                  return true;
              });

    run_timed(5, "reciprocity interior(t) == -L(-t) for t in 1..3, all shapes", 0,
              [&catalog13](std::string& detail) {
                  if (catalog13.empty()) {
                      detail = "catalog not measured";
                      return false;
                  }
                  for (const VerifiedCube& v : catalog13) {
                      const EhrhartCubic* fits[4] = {&v.cube_fit, &v.tetra1_fit,
                                                     &v.tetra2_fit, &v.octa_fit};
                      for (int s = 0; s < 4; ++s)
                          for (Int t = 1; t <= 3; ++t) {
                              const Rational want = Rational(0) - fits[s]->eval(-t);
                              const Rational got(
                                  v.interiors[static_cast<std::size_t>(s)]
                                             [static_cast<std::size_t>(t - 1)]);
                              if (want != got) {
                                  detail = "violation at " + cube_id(v.cube);
                                  return false;
                              }
                          }
                  }
                  return true;
              });

    run_timed(6, "wandering set: half-open cell holds exactly ell^3 points", 0,
              [&catalog13](std::string& detail) {
                  if (catalog13.empty()) {
                      detail = "catalog not measured";
                      return false;
                  }
                  for (const VerifiedCube& v : catalog13) {
                      const Int ell = v.cube.side();
                      if (v.half_open != ell * ell * ell) {
                          detail = "violation at " + cube_id(v.cube);
                          return false;
                      }
                  }
                  return true;
              });

    run_timed(7, "side-1105 divisor profile and gcd-sum scan up to ell=13", 1.0,
              [](std::string& detail) {
                  const CubeMatrix c = counterexample_1105();
                  const DivisorProfile p = divisor_profile(c);
                  if (p.d != std::array<Int, 3>{13, 5, 17} || p.d_sum() != 35) {
                      detail = "row gcds off";
                      return false;
                  }
                  if (p.col_sum() != 7) {
                      detail = "column gcd sum off";
                      return false;
                  }
                  if (lambda_coefficients(c).first != 38675) {
                      detail = "lambda1 off";
                      return false;
                  }
                  if (is_self_dual(c)) {
                      detail = "expected not self-dual";
                      return false;
                  }
                  const ConjectureScanReport scan = conjecture_scan(13);
                  if (!scan.violations.empty() || scan.cubes_checked != 8) {
                      detail = "scan up to ell=13 must be clean over 8 cubes";
                      return false;
                  }
                  return true;
              });

    run_timed(8, "class counts: one class per side 1..11, two at 13", 30.0,
              [](std::string& detail) {
                  for (Int ell : {1, 3, 5, 7, 9, 11}) {
                      const auto classes = cubes_of_side(ell);
                      if (classes.size() != 1) {
                          std::ostringstream os;
                          os << "ell=" << ell << ": " << classes.size() << " classes";
                          detail = os.str();
                          return false;
                      }
                  }
                  if (cubes_of_side(13).size() != 2) {
                      detail = "ell=13 must have exactly 2 classes";
                      return false;
                  }
                  return true;
              });

    run_timed(9, "L(C,1) <= (ell+1)^3 with equality exactly at ell*C1", 0,
              [&catalog13](std::string& detail) {
                  if (catalog13.empty()) {
                      detail = "catalog not measured";
                      return false;
                  }
                  for (const VerifiedCube& v : catalog13)
                      if (!max_count_bound(v.cube).all_asserted_pass()) {
                          detail = "violation at " + cube_id(v.cube);
                          return false;
                      }
                  // equality case: the tripled unit cube attains the bound
                  const CubeMatrix tripled = rows(1, 0, 0, 0, 1, 0, 0, 0, 1).scaled(3);
                  if (cube_closed_form(tripled).eval(1) != Rational(64)) {
                      detail = "3*C1 must contain 64 points at t=1";
                      return false;
                  }
                  if (!max_count_bound(tripled).all_asserted_pass()) {
                      detail = "equality case misreported";
                      return false;
                  }
                  return true;
              });

    run_timed(10, "divisor-sum readings separate on the side-5 cube", 0,
              [](std::string& detail) {
                  const CubeMatrix c5 = rows(4, 3, 0, 3, -4, 0, 0, 0, 5);
                  const IdentityReport rep = mu2_nu2_relation(c5);
                  if (rep.checks.size() != 2) {
                      detail = "report must carry both readings";
                      return false;
                  }
                  const IdentityCheck& relation = rep.checks[0];
                  const IdentityCheck& literal = rep.checks[1];
                  if (!(relation.asserted && relation.pass() &&
                        relation.actual == Rational(6))) {
                      detail = "nu2+2mu2 == 6+tau must hold with value 6";
                      return false;
                  }
                  if (!(!literal.asserted && literal.expected == Rational(10) &&
                        !literal.pass())) {
                      detail = "literal row-gcd reading must surface 10 vs 6";
                      return false;
                  }
                  return rep.all_asserted_pass();
              });

    run_timed(11, "verify output is byte-identical across thread counts", 0,
              [](std::string& detail) {
                  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
                  std::ostringstream out1, err1, outn, errn;
                  const int code1 = cli::run(
                      {"verify", "--ell-max", "13", "--threads", "1"}, out1, err1);
                  const int coden = cli::run(
                      {"verify", "--ell-max", "13", "--threads", std::to_string(hw)},
                      outn, errn);
                  if (code1 != 0 || coden != 0) {
                      std::ostringstream os;
                      os << "exit codes " << code1 << " and " << coden;
                      detail = os.str();
                      return false;
                  }
                  if (out1.str() != outn.str()) {
                      detail = "outputs differ between 1 and " + std::to_string(hw) +
                               " threads";
                      return false;
                  }
                  if (out1.str().empty()) {
                      detail = "verify produced no output";
                      return false;
                  }
                  return true;
              });

    if (g_failures == 0) {
        std::cout << "all 11 criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
}
