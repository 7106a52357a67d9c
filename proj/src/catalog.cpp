#include "latpoly/catalog.hpp"

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "latpoly/json_io.hpp"

namespace latpoly {
namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// All integer vectors of squared norm ell^2: bases a >= b >= c >= 0 fanned
// out through the signed permutation group, deduplicated.
std::vector<IntVec3> sphere_vectors(Int ell) {
    std::set<IntVec3> out;
    const Int nn = checked_mul(ell, ell);
    for (Int a = 0; a <= ell; ++a) {
        for (Int b = 0; b <= a; ++b) {
            const Int rem = nn - a * a - b * b;
            if (rem < 0) break;
            const Int c = exact_isqrt(rem);
            if (c * c != rem || c > b) continue;
            const IntVec3 base{a, b, c};
            for (const SignedPerm& sp : signed_perm_group()) out.insert(sp.apply(base));
        }
    }
    return {out.begin(), out.end()};
}

// Vectors of squared norm ell^2 whose component gcd exceeds 1: g * w for
// every divisor g > 1 of ell and every w of norm (ell/g)^2.
std::vector<IntVec3> imprimitive_sphere_vectors(Int ell) {
    std::set<IntVec3> out;
    for (Int g = 2; g <= ell; ++g) {
        if (ell % g != 0) continue;
        for (const IntVec3& w : sphere_vectors(ell / g)) out.insert(w * g);
    }
    return {out.begin(), out.end()};
}

// Canonical forms of all irreducible cubes whose first two rows come from
// vecs. The third row of a cube is forced: +-cross(v, w) / ell, and the
// sign choice lands in the same two-sided class, so only + is taken.
std::set<Flat9> orthogonal_classes(const std::vector<IntVec3>& vecs, Int ell,
                                   bool all_rows_imprimitive, unsigned threads,
                                   const ProgressFn& progress) {
    const std::size_t n = vecs.size();
    unsigned workers = threads ? threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n ? n : 1));

    std::mutex progress_mu;
    std::size_t done = 0;
    auto scan_range = [&](std::size_t i0, std::size_t i1, std::set<Flat9>& local) {
        for (std::size_t i = i0; i < i1; ++i) {
            const IntVec3& v = vecs[i];
            for (const IntVec3& w : vecs) {
                if (dot(v, w) != 0) continue;
                const IntVec3 cr = cross(v, w);
                if (cr.x % ell || cr.y % ell || cr.z % ell) continue;
                const IntVec3 z{cr.x / ell, cr.y / ell, cr.z / ell};
                const CubeMatrix cube = CubeMatrix::from_rows({{v, w, z}});
                if (!is_irreducible(cube)) continue;
                if (all_rows_imprimitive && vec_gcd(z) == 1) continue;
                local.insert(flatten(canonicalize(cube).rows()));
            }
            if (progress) {
                const std::lock_guard<std::mutex> lock(progress_mu);
                progress(ell, ++done, n);
            }
        }
    };

    if (workers <= 1) {
        std::set<Flat9> classes;
        scan_range(0, n, classes);
        return classes;
    }
    std::vector<std::set<Flat9>> locals(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        const std::size_t i0 = std::min(n, t * chunk);
        const std::size_t i1 = std::min(n, i0 + chunk);
        pool.emplace_back(scan_range, i0, i1, std::ref(locals[t]));
    }
    for (std::thread& t : pool) t.join();
    std::set<Flat9> classes;
    for (const auto& local : locals) classes.insert(local.begin(), local.end());
    return classes;
}

std::vector<CubeMatrix> to_cubes(const std::set<Flat9>& classes) {
    std::vector<CubeMatrix> out;
    out.reserve(classes.size());
    for (const Flat9& f : classes) out.push_back(CubeMatrix::from_rows(unflatten(f)));
    return out;
}

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
        now = static_cast<std::time_t>(std::atoll(epoch));
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::vector<CubeMatrix> cubes_of_side(Int ell, Int bound, unsigned threads) {
    require(ell >= 1, "cubes_of_side: side must be positive");
    require(ell % 2 == 1,
            "cubes_of_side: even sides admit no irreducible cube (an even-sided "
            "lattice cube is an integer multiple of a smaller one); use an odd side");
    require(ell <= bound, "cubes_of_side: side " + std::to_string(ell) +
                              " exceeds the configured bound " + std::to_string(bound));
    return to_cubes(orthogonal_classes(sphere_vectors(ell), ell, false, threads, nullptr));
}

CubeCatalog build_catalog(Int ell_max, unsigned threads) {
    require(ell_max >= 1, "build_catalog: ell_max must be positive");
    CubeCatalog cat;
    cat.format_version = kCatalogFormatVersion;
    cat.ell_max = ell_max;
    cat.generated_at = timestamp_utc();
    for (Int ell = 1; ell <= ell_max; ell += 2) {
        std::vector<CatalogEntry>& list = cat.entries[ell];
        for (const CubeMatrix& cube : cubes_of_side(ell, ell_max, threads))
            list.push_back({cube, divisor_profile(cube), cube_closed_form(cube),
                            is_self_dual(cube)});
    }
    return cat;
}

std::optional<CubeCatalog> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    const Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return std::nullopt;
    if (!j.is_object() || j.value("format_version", -1) != kCatalogFormatVersion)
        return std::nullopt;
    try {
        return catalog_from_json(j);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void save_catalog(const CubeCatalog& cat, const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("save_catalog: cannot write " + tmp.string());
        out << to_json(cat).dump(2) << '\n';
        if (!out) throw std::runtime_error("save_catalog: write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

CubeCatalog load_or_build_catalog(const std::string& path, Int ell_max, unsigned threads) {
    if (!path.empty())
        if (std::optional<CubeCatalog> cached = load_catalog(path);
            cached && cached->ell_max >= ell_max)
            return *std::move(cached);
    CubeCatalog cat = build_catalog(ell_max, threads);
    if (!path.empty()) save_catalog(cat, path);
    return cat;
}

std::vector<CubeMatrix> find_all_divisors_gt1(const std::vector<Int>& sides,
                                              unsigned threads, const ProgressFn& progress) {
    std::vector<CubeMatrix> out;
    for (const Int ell : sides) {
        require(ell >= 1 && ell % 2 == 1, "find_all_divisors_gt1: sides must be odd");
        const std::vector<IntVec3> vecs = imprimitive_sphere_vectors(ell);
        for (const CubeMatrix& cube :
             to_cubes(orthogonal_classes(vecs, ell, true, threads, progress))) {
            const DivisorProfile p = divisor_profile(cube);
            if (std::min({p.d[0], p.d[1], p.d[2]}) > 1) out.push_back(cube);
        }
    }
    return out;
}

ConjectureScanReport conjecture_scan(Int ell_max, const std::vector<CubeMatrix>& extra,
                                     unsigned threads) {
    ConjectureScanReport rep;
    rep.ell_max = ell_max;
    auto check = [&rep](const CubeMatrix& cube) {
        const DivisorProfile p = divisor_profile(cube);
        ++rep.cubes_checked;
        if (p.d_sum() != p.col_sum())
            rep.violations.push_back({cube, p.d_sum(), p.col_sum()});
    };
    for (Int ell = 1; ell <= ell_max; ell += 2)
        for (const CubeMatrix& cube :
             cubes_of_side(ell, std::max(ell_max, kDefaultSideBound), threads))
            check(cube);
    for (const CubeMatrix& cube : extra) check(cube);
    return rep;
}

std::vector<EhrhartCubic> ehrhart_polynomial_census(Int ell, Int bound, unsigned threads) {
    std::set<EhrhartCubic> polys;
    for (const CubeMatrix& cube : cubes_of_side(ell, bound, threads))
        polys.insert(cube_closed_form(cube));
    return {polys.begin(), polys.end()};
}

CubeMatrix counterexample_1105() {
    return CubeMatrix::from_rows({{IntVec3{-65, 156, 1092}, IntVec3{420, 1015, -120},
                                   IntVec3{1020, -408, 119}}});
}

}  // namespace latpoly
