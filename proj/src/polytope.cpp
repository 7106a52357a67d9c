#include "latpoly/polytope.hpp"

#include <set>
#include <stdexcept>

namespace latpoly {
namespace {

IntVec3 primitive(const IntVec3& v) {
    const Int g = vec_gcd(v);
    if (g == 0) throw std::invalid_argument("zero normal");
    return {v.x / g, v.y / g, v.z / g};
}

// The face-normal directions s1..s4; gcd(s_i) is the divisor D_i.
std::array<IntVec3, 4> sign_sums(const CubeMatrix& c) {
    const IntVec3 a = c.alpha(), b = c.beta(), g = c.gamma();
    return {a + b + g, a + b - g, a - b + g, -a + b + g};
}

Halfspace reduced(const IntVec3& n, Int offset) {
    const Int g = vec_gcd(n);
    if (offset % g != 0)
        throw std::logic_error("facet offset not divisible by normal gcd");
    return {{n.x / g, n.y / g, n.z / g}, offset / g};
}

}  // namespace

LatticePolytope cube_polytope(const CubeMatrix& c) {
    const IntVec3 a = c.alpha(), b = c.beta(), g = c.gamma();
    const Int nn = checked_mul(c.side(), c.side());
    LatticePolytope p;
    p.kind = PolytopeKind::cube;
    p.source_side = c.side();
    p.vertices = {{0, 0, 0}, a, b, g, a + b, b + g, g + a, a + b + g};
    for (const IntVec3& row : c.rows().row) {
        const Halfspace upper = reduced(row, nn);
        p.halfspaces.push_back({-upper.normal, 0});
        p.halfspaces.push_back(upper);
    }
    return p;
}

LatticePolytope tetrahedron_of(const CubeMatrix& c, int which) {
    const IntVec3 a = c.alpha(), b = c.beta(), g = c.gamma();
    const Int nn = checked_mul(c.side(), c.side());
    const auto s = sign_sums(c);
    LatticePolytope p;
    p.kind = PolytopeKind::tetrahedron;
    p.source_side = c.side();
    if (which == 1) {
        p.vertices = {{0, 0, 0}, a + b, b + g, g + a};
        p.halfspaces.push_back(reduced(s[0], checked_mul(2, nn)));
        for (int i = 1; i < 4; ++i) p.halfspaces.push_back(reduced(-s[i], 0));
    } else if (which == 2) {
        p.vertices = {a, b, g, a + b + g};
        p.halfspaces.push_back(reduced(-s[0], -nn));
        for (int i = 1; i < 4; ++i) p.halfspaces.push_back(reduced(s[i], nn));
    } else {
        throw std::invalid_argument("tetrahedron_of: which must be 1 or 2");
    }
    return p;
}

LatticePolytope octahedron_of(const CubeMatrix& c) {
    const IntVec3 a = c.alpha(), b = c.beta(), g = c.gamma();
    const Int nn = checked_mul(c.side(), c.side());
    LatticePolytope p;
    p.kind = PolytopeKind::octahedron;
    p.source_side = c.side();
    p.vertices = {a, b, g, -a, -b, -g};
    for (const IntVec3& s : sign_sums(c)) {
        const Halfspace h = reduced(s, nn);
        p.halfspaces.push_back(h);
        p.halfspaces.push_back({-h.normal, h.offset});
    }
    return p;
}

std::vector<Halfspace> facets_from_vertices(const std::vector<IntVec3>& vertices) {
    const std::size_t n = vertices.size();
    if (n < 4) throw std::invalid_argument("facets_from_vertices: need at least 4 vertices");
    IntVec3 centroid_n = {0, 0, 0};  // centroid scaled by n, stays integral
    for (const IntVec3& v : vertices) centroid_n = centroid_n + v;

    std::set<Halfspace> found;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const IntVec3 raw =
                    cross(vertices[j] - vertices[i], vertices[k] - vertices[i]);
                if (raw == IntVec3{0, 0, 0}) continue;
                IntVec3 nrm = primitive(raw);
                Int off = dot(nrm, vertices[i]);
                const Wide side = wide_dot(nrm, centroid_n) -
                                  static_cast<Wide>(off) * static_cast<Wide>(n);
                if (side == 0) continue;  // plane through the centroid
                if (side > 0) {
                    nrm = -nrm;
                    off = checked_neg(off);
                }
                bool facet = true;
                for (const IntVec3& v : vertices)
                    if (wide_dot(nrm, v) > off) {
                        facet = false;
                        break;
                    }
                if (facet) found.insert({nrm, off});
            }
    if (found.size() < 4)
        throw std::invalid_argument("facets_from_vertices: degenerate vertex set");
    return {found.begin(), found.end()};
}

LatticePolytope dilate(const LatticePolytope& p, Int t) {
    if (t < 1) throw std::invalid_argument("dilate: t must be positive");
    LatticePolytope q;
    q.kind = p.kind;
    q.source_side = p.source_side;
    q.vertices.reserve(p.vertices.size());
    for (const IntVec3& v : p.vertices) q.vertices.push_back(v * t);
    q.halfspaces.reserve(p.halfspaces.size());
    for (const Halfspace& h : p.halfspaces)
        q.halfspaces.push_back({h.normal, checked_mul(h.offset, t)});
    return q;
}

}  // namespace latpoly
