#include "latpoly/cli.hpp"

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "latpoly/catalog.hpp"
#include "latpoly/counting.hpp"
#include "latpoly/cube.hpp"
#include "latpoly/ehrhart.hpp"
#include "latpoly/json_io.hpp"
#include "latpoly/plane_basis.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly::cli {
namespace {

struct CommonOpts {
    std::string format = "json";
    unsigned threads = 0;
};

struct CubeSourceOpts {
    std::string rows;
    std::string rodrigues;
    std::string pythagorean;
};

std::vector<Int> parse_int_list(const std::string& text, std::size_t want,
                                const char* flag) {
    std::vector<Int> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoll(tok, &used));
        if (used != tok.size())
            throw std::invalid_argument(std::string(flag) + ": bad integer '" + tok + "'");
    }
    if (out.size() != want)
        throw std::invalid_argument(std::string(flag) + ": expected " +
                                    std::to_string(want) + " comma-separated integers");
    return out;
}

CubeMatrix cube_from(const CubeSourceOpts& src) {
    const int given = (!src.rows.empty()) + (!src.rodrigues.empty()) +
                      (!src.pythagorean.empty());
    if (given != 1)
        throw std::invalid_argument(
            "specify the cube with exactly one of --rows, --rodrigues, --pythagorean");
    if (!src.rows.empty()) return CubeMatrix::from_rows(parse_rows(src.rows));
    if (!src.rodrigues.empty()) {
        const auto v = parse_int_list(src.rodrigues, 4, "--rodrigues");
        return CubeMatrix::rodrigues(v[0], v[1], v[2], v[3]);
    }
    const auto v = parse_int_list(src.pythagorean, 3, "--pythagorean");
    return CubeMatrix::pythagorean(v[0], v[1], v[2]);
}

LatticePolytope shape_of(const CubeMatrix& c, const std::string& shape, int which) {
    if (shape == "cube") return cube_polytope(c);
    if (shape == "tetra") return tetrahedron_of(c, which);
    if (shape == "octa") return octahedron_of(c);
    throw std::invalid_argument("--shape must be cube, tetra or octa");
}

void reject_csv(const CommonOpts& common, const char* sub) {
    if (common.format == "csv")
        throw std::invalid_argument(std::string("csv output is not supported for ") + sub);
}

CatalogEntry make_entry(const CubeMatrix& cube) {
    return {cube, divisor_profile(cube), cube_closed_form(cube), is_self_dual(cube)};
}

std::string pretty_profile(const DivisorProfile& p) {
    std::ostringstream os;
    os << "d=(" << p.d[0] << ',' << p.d[1] << ',' << p.d[2] << ") D=(" << p.D[0] << ','
       << p.D[1] << ',' << p.D[2] << ',' << p.D[3] << ") col=(" << p.col[0] << ','
       << p.col[1] << ',' << p.col[2] << ')';
    return os.str();
}

void print_cubes(const std::vector<CubeMatrix>& cubes, const CommonOpts& common,
                 std::ostream& out) {
    if (common.format == "csv") {
        out << catalog_csv_header() << '\n';
        for (const CubeMatrix& c : cubes) out << catalog_csv_row(make_entry(c), c.side()) << '\n';
        return;
    }
    for (const CubeMatrix& c : cubes) {
        if (common.format == "json") {
            out << to_json(c).dump() << '\n';
        } else {
            const CatalogEntry e = make_entry(c);
            out << "cube ell=" << c.side() << " rows=" << rows_str(c.rows()) << '\n'
                << "  " << pretty_profile(e.profile) << '\n'
                << "  irreducible=" << (is_irreducible(c) ? "true" : "false")
                << " self_dual=" << (e.self_dual ? "true" : "false") << '\n'
                << "  L(t) = " << e.closed_form.str() << '\n';
        }
    }
}

// generate: construct cubes and print them.
struct GenerateOpts {
    CubeSourceOpts src;
    Int side = 0;
    Int bound = kDefaultSideBound;
};

int run_generate(const GenerateOpts& o, const CommonOpts& common, std::ostream& out) {
    std::vector<CubeMatrix> cubes;
    if (o.side != 0) {
        const int others = (!o.src.rows.empty()) + (!o.src.rodrigues.empty()) +
                           (!o.src.pythagorean.empty());
        if (others != 0)
            throw std::invalid_argument("--side cannot be combined with an explicit cube");
        cubes = cubes_of_side(o.side, std::max(o.bound, o.side));
    } else {
        cubes.push_back(cube_from(o.src));
    }
    print_cubes(cubes, common, out);
    return 0;
}

// count: lattice points of one dilated shape.
struct CountOpts {
    CubeSourceOpts src;
    std::string shape = "cube";
    int which = 1;
    Int t = 1;
};

int run_count(const CountOpts& o, const CommonOpts& common, std::ostream& out) {
    const CubeMatrix cube = cube_from(o.src);
    const CountResult r = count(shape_of(cube, o.shape, o.which), o.t, common.threads);
    if (common.format == "json") {
        out << to_json(r).dump() << '\n';
    } else if (common.format == "csv") {
        out << "t,closed,interior,boundary\n"
            << r.dilation << ',' << r.closed << ',' << r.interior << ',' << r.boundary
            << '\n';
    } else {
        out << o.shape << " ell=" << cube.side() << " t=" << r.dilation
            << ": closed=" << r.closed << " interior=" << r.interior
            << " boundary=" << r.boundary << '\n';
    }
    return 0;
}

// ehrhart: closed form (where known) vs brute-force fit.
struct EhrhartOpts {
    CubeSourceOpts src;
    std::string shape = "cube";
    int which = 1;
};

int run_ehrhart(const EhrhartOpts& o, const CommonOpts& common, std::ostream& out) {
    reject_csv(common, "ehrhart");
    const CubeMatrix cube = cube_from(o.src);
    const LatticePolytope poly = shape_of(cube, o.shape, o.which);
    const EhrhartCubic fitted = fit_from_counts(poly, common.threads);

    Json closed;
    bool match = false;
    if (o.shape == "cube") {
        const EhrhartCubic cf = cube_closed_form(cube);
        closed = to_json(cf);
        match = cf == fitted;
    } else {
        // mu2 / nu2 have no closed form, so c1 is published as null and the
        // match covers the three known coefficients.
        const auto [mu1, nu1] = mu1_nu1(cube);
        const Wide ell3 = static_cast<Wide>(cube.side()) * cube.side() * cube.side();
        const Rational c3 = o.shape == "tetra" ? Rational(ell3, 3) : Rational(4 * ell3, 3);
        const Rational c2 = o.shape == "tetra" ? mu1 : nu1;
        closed["c3"] = to_json(c3);
        closed["c2"] = to_json(c2);
        closed["c1"] = nullptr;
        closed["c0"] = to_json(Rational(1));
        match = fitted.c3 == c3 && fitted.c2 == c2 && fitted.c0 == Rational(1);
    }

    if (common.format == "json") {
        Json j;
        j["closed_form"] = std::move(closed);
        j["fitted"] = to_json(fitted);
        j["match"] = match;
        out << j.dump() << '\n';
    } else {
        out << "closed form: "
            << (o.shape == "cube" ? cube_closed_form(cube).str()
                                  : closed["c3"].get<std::string>() + "*t^3 + " +
                                        closed["c2"].get<std::string>() + "*t^2 + ?*t + 1")
            << '\n'
            << "fitted:      " << fitted.str() << '\n'
            << "match:       " << (match ? "true" : "false") << '\n';
    }
    return 0;
}

// verify: the full identity suite over the catalog.
struct VerifyOpts {
    Int ell_max = 13;
    std::string catalog_path;
};

void append_coeff_checks(IdentityReport& rep, const std::string& prefix,
                         const EhrhartCubic& expected, const EhrhartCubic& actual,
                         bool asserted = true) {
    rep.checks.push_back({prefix + " c3", expected.c3, actual.c3, asserted});
    rep.checks.push_back({prefix + " c2", expected.c2, actual.c2, asserted});
    rep.checks.push_back({prefix + " c1", expected.c1, actual.c1, asserted});
    rep.checks.push_back({prefix + " c0", expected.c0, actual.c0, asserted});
}

struct MeasuredShape {
    LatticePolytope poly;
    std::array<CountResult, 4> at;  // t = 1..4
    EhrhartCubic fit;
};

MeasuredShape measure(LatticePolytope poly, unsigned threads) {
    MeasuredShape m{std::move(poly), {}, {}};
    std::array<std::pair<Int, Int>, 4> pts;
    for (Int t = 1; t <= 4; ++t) {
        m.at[static_cast<std::size_t>(t - 1)] = count(m.poly, t, threads);
        pts[static_cast<std::size_t>(t - 1)] = {
            t, m.at[static_cast<std::size_t>(t - 1)].closed};
    }
    m.fit = fit_cubic(pts);
    return m;
}

IdentityReport reciprocity_report(const MeasuredShape& m, const std::string& subject) {
    IdentityReport rep{subject, {}};
    for (Int t = 1; t <= 3; ++t) {
        const Rational predicted = Rational(0) - m.fit.eval(-t);
        rep.checks.push_back(
            {"interior(" + std::to_string(t) + ") == -L(-" + std::to_string(t) + ")",
             predicted, Rational(m.at[static_cast<std::size_t>(t - 1)].interior), true});
    }
    return rep;
}

std::vector<IdentityReport> verify_cube(const CubeMatrix& cube, unsigned threads) {
    std::vector<IdentityReport> reports;
    const std::string id = cube_id(cube);
    const Int ell = cube.side();
    const Wide ell3 = static_cast<Wide>(ell) * ell * ell;

    const EhrhartCubic closed = cube_closed_form(cube);
    const MeasuredShape mc = measure(cube_polytope(cube), threads);
    const MeasuredShape mt1 = measure(tetrahedron_of(cube, 1), threads);
    const MeasuredShape mt2 = measure(tetrahedron_of(cube, 2), threads);
    const MeasuredShape mo = measure(octahedron_of(cube), threads);

    IdentityReport poly_rep{"cube polynomial " + id, {}};
    append_coeff_checks(poly_rep, "fit == closed form:", closed, mc.fit);
    const auto quad = divide_by_linear(mc.fit, ell);
    const bool integer_quad = quad && quad->a.is_integer() && quad->b.is_integer() &&
                              quad->c.is_integer();
    poly_rep.checks.push_back({"factors as (ell*t+1)*(integer quadratic)", Rational(1),
                               Rational(integer_quad ? 1 : 0), true});
    const auto [l1, l2] = lambda_coefficients(cube);
    poly_rep.checks.push_back(
        {"lambda2 == lambda1/ell", Rational(l2), Rational(l1) / Rational(ell), true});
    reports.push_back(std::move(poly_rep));

    const auto [mu1, nu1] = mu1_nu1(cube);
    IdentityReport to_rep{"tetra/octa coefficients " + id, {}};
    to_rep.checks.push_back({"tetra c3 == ell^3/3", Rational(ell3, 3), mt1.fit.c3, true});
    to_rep.checks.push_back({"tetra c2 == mu1", mu1, mt1.fit.c2, true});
    to_rep.checks.push_back({"tetra c0 == 1", Rational(1), mt1.fit.c0, true});
    to_rep.checks.push_back({"octa c3 == 4*ell^3/3", Rational(4 * ell3, 3), mo.fit.c3, true});
    to_rep.checks.push_back({"octa c2 == nu1", nu1, mo.fit.c2, true});
    to_rep.checks.push_back({"octa c0 == 1", Rational(1), mo.fit.c0, true});
    to_rep.checks.push_back(
        {"nu1 == 2*mu1 (fitted)", mt1.fit.c2 + mt1.fit.c2, mo.fit.c2, true});
    append_coeff_checks(to_rep, "tetra which=2 == which=1:", mt1.fit, mt2.fit);
    reports.push_back(std::move(to_rep));

    const Int tau = boundary_edge_interior_count(mt1.poly);
    const Rational lhs = mo.fit.c1 + mt1.fit.c1 + mt1.fit.c1;
    const DivisorProfile prof = divisor_profile(cube);
    const IntVec3 a = cube.alpha(), b = cube.beta(), g = cube.gamma();
    const Int literal = prof.d_sum() + vec_gcd(a - b) + vec_gcd(a - g) + vec_gcd(g - b);
    IdentityReport mn_rep{"mu2/nu2 " + id, {}};
    mn_rep.checks.push_back({"nu2+2mu2 == 6+tau", Rational(6 + tau), lhs, true});
    mn_rep.checks.push_back(
        {"nu2+2mu2 == d1+..+d6 (row-gcd reading, informational)", Rational(literal), lhs, false});
    reports.push_back(std::move(mn_rep));

    reports.push_back(reciprocity_report(mc, "reciprocity cube " + id));
    reports.push_back(reciprocity_report(mt1, "reciprocity tetra which=1 " + id));
    reports.push_back(reciprocity_report(mt2, "reciprocity tetra which=2 " + id));
    reports.push_back(reciprocity_report(mo, "reciprocity octa " + id));

    reports.push_back(max_count_bound(cube));

    IdentityReport w_rep{"wandering set " + id, {}};
    w_rep.checks.push_back({"half-open count == ell^3", Rational(ell3),
                            Rational(count_half_open_cube(cube, threads)), true});
    reports.push_back(std::move(w_rep));
    return reports;
}

int run_verify(const VerifyOpts& o, const CommonOpts& common, std::ostream& out) {
    reject_csv(common, "verify");
    const CubeCatalog cat =
        load_or_build_catalog(o.catalog_path, o.ell_max, common.threads);
    bool all_pass = true;
    for (const auto& [ell, entries] : cat.entries) {
        if (ell > o.ell_max) continue;
        for (const CatalogEntry& e : entries)
            for (const IdentityReport& rep : verify_cube(e.cube, common.threads)) {
                all_pass = all_pass && rep.all_asserted_pass();
                if (common.format == "json") {
                    out << to_json(rep).dump() << '\n';
                } else {
                    out << (rep.all_asserted_pass() ? "PASS " : "FAIL ") << rep.subject
                        << '\n';
                    for (const IdentityCheck& c : rep.checks)
                        if (!c.pass())
                            out << "  " << (c.asserted ? "failed: " : "info: ") << c.name
                                << " expected=" << c.expected.str()
                                << " actual=" << c.actual.str() << '\n';
                }
            }
    }
    return all_pass ? 0 : 1;
}

// search: targeted scans.
struct SearchOpts {
    bool all_divisors_gt1 = false;
    bool conjecture = false;
    std::vector<Int> sides;
    Int ell_max = 13;
    bool with_counterexample = false;
    bool progress = false;
};

int run_search(const SearchOpts& o, const CommonOpts& common, std::ostream& out,
               std::ostream& err) {
    reject_csv(common, "search");
    if (o.all_divisors_gt1 == o.conjecture)
        throw std::invalid_argument(
            "search: pick exactly one of --all-divisors-gt1 or --conjecture");
    if (o.all_divisors_gt1) {
        if (o.sides.empty())
            throw std::invalid_argument("search --all-divisors-gt1 needs at least one --ell");
        ProgressFn progress;
        if (o.progress)
            progress = [&err](Int ell, std::size_t done, std::size_t total) {
                if (done % 256 == 0 || done == total)
                    err << "ell=" << ell << ": " << done << "/" << total << " vectors\r";
            };
        const std::vector<CubeMatrix> found =
            find_all_divisors_gt1(o.sides, common.threads, progress);
        if (o.progress) err << '\n';
        print_cubes(found, common, out);
        if (common.format == "pretty" && found.empty()) out << "no cubes found\n";
        return 0;
    }
    std::vector<CubeMatrix> extra;
    if (o.with_counterexample) extra.push_back(counterexample_1105());
    const ConjectureScanReport rep = conjecture_scan(o.ell_max, extra, common.threads);
    if (common.format == "json") {
        Json j;
        j["ell_max"] = rep.ell_max;
        j["cubes_checked"] = rep.cubes_checked;
        Json viols = Json::array();
        for (const ConjectureViolation& v : rep.violations) {
            Json one;
            one["cube"] = to_json(v.cube);
            one["row_gcd_sum"] = v.row_gcd_sum;
            one["col_gcd_sum"] = v.col_gcd_sum;
            viols.push_back(std::move(one));
        }
        j["violations"] = std::move(viols);
        out << j.dump() << '\n';
    } else {
        out << "checked " << rep.cubes_checked << " cubes up to ell=" << rep.ell_max
            << ": " << rep.violations.size() << " violation(s)\n";
        for (const ConjectureViolation& v : rep.violations)
            out << "  " << cube_id(v.cube) << " row_gcd_sum=" << v.row_gcd_sum
                << " col_gcd_sum=" << v.col_gcd_sum << '\n';
    }
    return 0;
}

// census: distinct Ehrhart polynomials per side.
struct CensusOpts {
    Int ell = 0;
    Int bound = kDefaultSideBound;
};

int run_census(const CensusOpts& o, const CommonOpts& common, std::ostream& out) {
    reject_csv(common, "census");
    const std::vector<EhrhartCubic> polys =
        ehrhart_polynomial_census(o.ell, std::max(o.bound, o.ell), common.threads);
    if (common.format == "json") {
        Json j;
        j["ell"] = o.ell;
        j["count"] = polys.size();
        Json arr = Json::array();
        for (const EhrhartCubic& p : polys) arr.push_back(to_json(p));
        j["polynomials"] = std::move(arr);
        out << j.dump() << '\n';
    } else {
        out << "ell=" << o.ell << ": " << polys.size() << " distinct polynomial(s)\n";
        for (const EhrhartCubic& p : polys) out << "  " << p.str() << '\n';
    }
    return 0;
}

void add_common(CLI::App* sub, CommonOpts& common) {
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--threads", common.threads,
                    "worker threads (0 = hardware); affects speed only, never output");
}

void add_cube_source(CLI::App* sub, CubeSourceOpts& src) {
    sub->add_option("--rows", src.rows, "matrix rows 'a,b,c;d,e,f;g,h,i'");
    sub->add_option("--rodrigues", src.rodrigues, "four integer parameters 'a,b,c,d'");
    sub->add_option("--pythagorean", src.pythagorean, "primitive triple 'a,b,c'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lattice cubes, regular tetrahedra and octahedra in Z^3, with exact "
                 "Ehrhart polynomial verification"};
    app.name("latpoly");
    app.require_subcommand(1);

    int code = 0;
    CommonOpts common;

    GenerateOpts gen;
    CLI::App* sub_gen = app.add_subcommand("generate", "construct cubes and print them");
    add_cube_source(sub_gen, gen.src);
    sub_gen->add_option("--side", gen.side, "enumerate all classes of this odd side");
    sub_gen->add_option("--bound", gen.bound, "largest side the enumerator accepts");
    add_common(sub_gen, common);
    sub_gen->callback([&] { code = run_generate(gen, common, out); });

    CountOpts cnt;
    CLI::App* sub_cnt = app.add_subcommand("count", "count lattice points of a dilation");
    add_cube_source(sub_cnt, cnt.src);
    sub_cnt->add_option("--shape", cnt.shape, "cube, tetra or octa");
    sub_cnt->add_option("--which", cnt.which, "tetrahedron pick, 1 or 2");
    sub_cnt->add_option("--t", cnt.t, "dilation factor")->check(CLI::PositiveNumber);
    add_common(sub_cnt, common);
    sub_cnt->callback([&] { code = run_count(cnt, common, out); });

    EhrhartOpts ehr;
    CLI::App* sub_ehr =
        app.add_subcommand("ehrhart", "closed-form vs brute-force Ehrhart polynomial");
    add_cube_source(sub_ehr, ehr.src);
    sub_ehr->add_option("--shape", ehr.shape, "cube, tetra or octa");
    sub_ehr->add_option("--which", ehr.which, "tetrahedron pick, 1 or 2");
    add_common(sub_ehr, common);
    sub_ehr->callback([&] { code = run_ehrhart(ehr, common, out); });

    VerifyOpts ver;
    CLI::App* sub_ver =
        app.add_subcommand("verify", "run the full identity suite over the catalog");
    sub_ver->add_option("--ell-max", ver.ell_max, "largest side to verify")
        ->check(CLI::PositiveNumber);
    sub_ver->add_option("--catalog", ver.catalog_path, "catalog cache file");
    add_common(sub_ver, common);
    sub_ver->callback([&] { code = run_verify(ver, common, out); });

    SearchOpts sea;
    CLI::App* sub_sea = app.add_subcommand("search", "targeted scans");
    sub_sea->add_flag("--all-divisors-gt1", sea.all_divisors_gt1,
                      "find cubes whose three row gcds all exceed 1");
    sub_sea->add_flag("--conjecture", sea.conjecture,
                      "check row gcd sum == column gcd sum over the catalog");
    sub_sea->add_option("--ell", sea.sides, "side to search (repeatable)");
    sub_sea->add_option("--ell-max", sea.ell_max, "largest side for --conjecture");
    sub_sea->add_flag("--with-counterexample", sea.with_counterexample,
                      "include the known side-1105 cube in the scan");
    sub_sea->add_flag("--progress", sea.progress, "progress on standard error");
    add_common(sub_sea, common);
    sub_sea->callback([&] { code = run_search(sea, common, out, err); });

    CensusOpts cen;
    CLI::App* sub_cen =
        app.add_subcommand("census", "distinct Ehrhart polynomials of a side");
    sub_cen->add_option("--ell", cen.ell, "side to tabulate")
        ->required()
        ->check(CLI::PositiveNumber);
    sub_cen->add_option("--bound", cen.bound, "largest side the enumerator accepts");
    add_common(sub_cen, common);
    sub_cen->callback([&] { code = run_census(cen, common, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "identity failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return code;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace latpoly::cli
