#pragma once

#include "latpoly/cube.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

struct CountResult {
    Int closed;
    Int interior;
    Int boundary;
    Int dilation;

    friend bool operator==(const CountResult&, const CountResult&) = default;
};

/// Exact lattice point counts for the dilation t * P. Scans the integer
/// bounding box of the dilated vertices in z-slabs split across threads;
/// membership uses 128-bit halfspace dots, never floating point. The result
/// is independent of thread count. threads = 0 picks the hardware count.
CountResult count(const LatticePolytope& p, Int t, unsigned threads = 0);

/// Lattice points of the half-open cell {x : 0 <= dot(row_i, x) < ell^2}.
/// This tiles Z^3 under the sublattice spanned by the rows, so the count is
/// the index ell^3; counted directly as a check of that identity.
Int count_half_open_cube(const CubeMatrix& c, unsigned threads = 0);

/// tau: lattice points strictly inside the six edges of a tetrahedron,
/// computed as sum of (gcd of edge vector components - 1) over edges.
/// Throws std::invalid_argument for non-tetrahedra.
Int boundary_edge_interior_count(const LatticePolytope& p);

}  // namespace latpoly
