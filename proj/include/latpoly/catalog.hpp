#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latpoly/cube.hpp"
#include "latpoly/cubic.hpp"
#include "latpoly/ehrhart.hpp"

namespace latpoly {

struct CatalogEntry {
    CubeMatrix cube;  // canonical representative
    DivisorProfile profile;
    EhrhartCubic closed_form;
    bool self_dual;
};

/// Classification of irreducible cubes by side, plus generation provenance.
/// Bump kCatalogFormatVersion on any schema change; stale files reload as
/// a cache miss, never as garbage.
struct CubeCatalog {
    int format_version = 0;
    Int ell_max = 0;
    std::string generated_at;
    std::map<Int, std::vector<CatalogEntry>> entries;
};

inline constexpr int kCatalogFormatVersion = 1;
inline constexpr Int kDefaultSideBound = 21;

/// All classes of irreducible side-ell cubes, one canonical representative
/// each, sorted. ell must be odd (even sides admit no irreducible cube) and
/// within bound.
std::vector<CubeMatrix> cubes_of_side(Int ell, Int bound = kDefaultSideBound,
                                      unsigned threads = 0);

/// Enumerates sides 1, 3, ..., ell_max into a catalog.
CubeCatalog build_catalog(Int ell_max, unsigned threads = 0);

/// Loads a catalog if the file exists, parses, and matches the current
/// format version and covers ell_max; otherwise builds and saves it.
CubeCatalog load_or_build_catalog(const std::string& path, Int ell_max,
                                  unsigned threads = 0);

std::optional<CubeCatalog> load_catalog(const std::string& path);

/// Whole-file atomic replace (write temp, rename over).
void save_catalog(const CubeCatalog& cat, const std::string& path);

using ProgressFn = std::function<void(Int ell, std::size_t done, std::size_t total)>;

/// Irreducible cubes of the given sides whose row gcds are all > 1, one per
/// class. The search only has to consider imprimitive vectors, which keeps
/// even side 1105 tractable.
std::vector<CubeMatrix> find_all_divisors_gt1(const std::vector<Int>& sides,
                                              unsigned threads = 0,
                                              const ProgressFn& progress = nullptr);

struct ConjectureViolation {
    CubeMatrix cube;
    Int row_gcd_sum;
    Int col_gcd_sum;
};

struct ConjectureScanReport {
    Int ell_max;
    std::size_t cubes_checked = 0;
    std::vector<ConjectureViolation> violations;
};

/// Checks row-gcd-sum = column-gcd-sum over all cataloged cubes of side
/// <= ell_max plus any extra cubes supplied (the known side-1105
/// counterexample is interesting to pass in explicitly).
ConjectureScanReport conjecture_scan(Int ell_max,
                                     const std::vector<CubeMatrix>& extra = {},
                                     unsigned threads = 0);

/// Distinct cube Ehrhart polynomials over all classes of side ell, sorted.
std::vector<EhrhartCubic> ehrhart_polynomial_census(Int ell,
                                                    Int bound = kDefaultSideBound,
                                                    unsigned threads = 0);

/// The side-1105 cube with row gcds (13, 5, 17); used by the search test
/// and the conjecture scan.
CubeMatrix counterexample_1105();

}  // namespace latpoly
