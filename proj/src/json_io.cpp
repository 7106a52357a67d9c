#include "latpoly/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace latpoly {

Json to_json(const IntVec3& v) { return Json::array({v.x, v.y, v.z}); }

Json to_json(const IntMat3& m) {
    return Json::array({to_json(m.row[0]), to_json(m.row[1]), to_json(m.row[2])});
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const EhrhartCubic& p) {
    Json j;
    j["c3"] = to_json(p.c3);
    j["c2"] = to_json(p.c2);
    j["c1"] = to_json(p.c1);
    j["c0"] = to_json(p.c0);
    return j;
}

Json to_json(const CubeMatrix& c) {
    const DivisorProfile p = divisor_profile(c);
    Json j;
    j["ell"] = c.side();
    j["rows"] = to_json(c.rows());
    Json div;
    div["d"] = Json(p.d);
    div["D"] = Json(p.D);
    div["e"] = Json(p.e);
    div["col"] = Json(p.col);
    j["divisors"] = std::move(div);
    j["irreducible"] = is_irreducible(c);
    j["self_dual"] = is_self_dual(c);
    return j;
}

Json to_json(const LatticePolytope& p) {
    Json j;
    switch (p.kind) {
        case PolytopeKind::cube: j["kind"] = "cube"; break;
        case PolytopeKind::tetrahedron: j["kind"] = "tetrahedron"; break;
        case PolytopeKind::octahedron: j["kind"] = "octahedron"; break;
    }
    j["ell"] = p.source_side;
    Json verts = Json::array();
    for (const IntVec3& v : p.vertices) verts.push_back(to_json(v));
    j["vertices"] = std::move(verts);
    Json hs = Json::array();
    for (const Halfspace& h : p.halfspaces) {
        Json one;
        one["n"] = to_json(h.normal);
        one["c"] = h.offset;
        hs.push_back(std::move(one));
    }
    j["halfspaces"] = std::move(hs);
    return j;
}

Json to_json(const CountResult& r) {
    Json j;
    j["t"] = r.dilation;
    j["closed"] = r.closed;
    j["interior"] = r.interior;
    j["boundary"] = r.boundary;
    return j;
}

Json to_json(const IdentityCheck& c) {
    Json j;
    j["name"] = c.name;
    j["expected"] = to_json(c.expected);
    j["actual"] = to_json(c.actual);
    j["pass"] = c.pass();
    j["asserted"] = c.asserted;
    return j;
}

Json to_json(const IdentityReport& r) {
    Json j;
    j["subject"] = r.subject;
    j["pass"] = r.all_asserted_pass();
    Json checks = Json::array();
    for (const IdentityCheck& c : r.checks) checks.push_back(to_json(c));
    j["checks"] = std::move(checks);
    return j;
}

Json to_json(const CubeCatalog& cat) {
    Json j;
    j["format_version"] = cat.format_version;
    j["ell_max"] = cat.ell_max;
    j["generated_at"] = cat.generated_at;
    Json entries;
    for (const auto& [ell, list] : cat.entries) {
        Json arr = Json::array();
        for (const CatalogEntry& e : list) {
            Json one = to_json(e.cube);
            one["closed_form"] = to_json(e.closed_form);
            arr.push_back(std::move(one));
        }
        entries[std::to_string(ell)] = std::move(arr);
    }
    j["entries"] = std::move(entries);
    return j;
}

CubeCatalog catalog_from_json(const Json& j) {
    CubeCatalog cat;
    cat.format_version = j.at("format_version").get<int>();
    cat.ell_max = j.at("ell_max").get<Int>();
    cat.generated_at = j.at("generated_at").get<std::string>();
    for (const auto& [key, arr] : j.at("entries").items()) {
        const Int ell = static_cast<Int>(std::stoll(key));
        std::vector<CatalogEntry>& list = cat.entries[ell];
        for (const Json& one : arr) {
            IntMat3 m;
            const Json& rows = one.at("rows");
            for (int r = 0; r < 3; ++r)
                m.row[r] = {rows.at(r).at(0).get<Int>(), rows.at(r).at(1).get<Int>(),
                            rows.at(r).at(2).get<Int>()};
            // Stored derived fields are cache only; recompute them all so a
            // tampered or stale file can never smuggle in wrong values.
            const CubeMatrix cube = CubeMatrix::from_rows(m);
            if (cube.side() != one.at("ell").get<Int>())
                throw std::invalid_argument("catalog: stored ell contradicts rows");
            list.push_back({cube, divisor_profile(cube), cube_closed_form(cube),
                            is_self_dual(cube)});
        }
    }
    return cat;
}

std::string catalog_csv_header() {
    return "ell,rows,d1,d2,d3,D1,D2,D3,D4,lambda1,lambda2,mu1,self_dual";
}

std::string catalog_csv_row(const CatalogEntry& e, Int ell) {
    const auto [l1, l2] = lambda_coefficients(e.cube);
    const Rational mu1 = mu1_nu1(e.cube).first;
    std::ostringstream os;
    os << ell << ",\"" << rows_str(e.cube.rows()) << '"';
    for (Int d : e.profile.d) os << ',' << d;
    for (Int d : e.profile.D) os << ',' << d;
    os << ',' << l1 << ',' << l2 << ',' << mu1.str() << ','
       << (e.self_dual ? "true" : "false");
    return os.str();
}

}  // namespace latpoly
