#pragma once

#include <string>

#include "json.hpp"

#include "latpoly/catalog.hpp"
#include "latpoly/counting.hpp"
#include "latpoly/cube.hpp"
#include "latpoly/cubic.hpp"
#include "latpoly/ehrhart.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

// ordered_json keeps insertion order, so identical inputs serialize to
// identical bytes; all emitters below rely on that.
using Json = nlohmann::ordered_json;

Json to_json(const IntVec3& v);
Json to_json(const IntMat3& m);
Json to_json(const Rational& r);  // string "p/q" or "p"
Json to_json(const EhrhartCubic& p);
Json to_json(const CubeMatrix& c);  // full schema with divisors and flags
Json to_json(const LatticePolytope& p);
Json to_json(const CountResult& r);
Json to_json(const IdentityCheck& c);
Json to_json(const IdentityReport& r);
Json to_json(const CubeCatalog& cat);

CubeCatalog catalog_from_json(const Json& j);  // throws on malformed input

std::string catalog_csv_header();
std::string catalog_csv_row(const CatalogEntry& e, Int ell);

}  // namespace latpoly
