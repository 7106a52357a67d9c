#pragma once

#include <vector>

#include "latpoly/cube.hpp"
#include "latpoly/exact.hpp"

namespace latpoly {

/// Closed halfspace dot(normal, x) <= offset with primitive integer normal.
struct Halfspace {
    IntVec3 normal;
    Int offset;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
    friend auto operator<=>(const Halfspace& a, const Halfspace& b) {
        return std::array{a.normal.x, a.normal.y, a.normal.z, a.offset} <=>
               std::array{b.normal.x, b.normal.y, b.normal.z, b.offset};
    }
};

enum class PolytopeKind { cube, tetrahedron, octahedron };

/// Convex polytope as an intersection of halfspaces, with the vertex list
/// kept alongside for bounding boxes and edge scans.
struct LatticePolytope {
    PolytopeKind kind;
    Int source_side;
    std::vector<IntVec3> vertices;
    std::vector<Halfspace> halfspaces;
};

/// The cube itself: vertices are the subset sums of the rows; halfspaces are
/// 0 <= dot(row_i, x) <= ell^2 with normals reduced to primitive form.
LatticePolytope cube_polytope(const CubeMatrix& c);

/// The two regular tetrahedra inscribed in the cube. which = 1 picks
/// vertices {0, a+b, b+c, c+a}; which = 2 picks {a, b, c, a+b+c}.
/// All edges have squared length 2 * ell^2.
LatticePolytope tetrahedron_of(const CubeMatrix& c, int which);

/// The regular octahedron with vertices +-a, +-b, +-c and facet halfspaces
/// |dot(n, x)| <= ell^2 for n in {a+b+c, a+b-c, a-b+c, -a+b+c}, normals
/// reduced to primitive form.
LatticePolytope octahedron_of(const CubeMatrix& c);

/// Recovers the facets of conv(vertices) by scanning all vertex triples; an
/// independent oracle for the closed-form halfspace lists. Normals come out
/// primitive, oriented outward, deduplicated, sorted.
std::vector<Halfspace> facets_from_vertices(const std::vector<IntVec3>& vertices);

/// Dilation t * P: vertices and offsets scaled, normals unchanged.
LatticePolytope dilate(const LatticePolytope& p, Int t);

}  // namespace latpoly
