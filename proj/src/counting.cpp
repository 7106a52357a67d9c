#include "latpoly/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace latpoly {
namespace {

struct Box {
    IntVec3 lo;
    IntVec3 hi;
};

Box vertex_box(const std::vector<IntVec3>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("count: polytope has no vertices");
    Box b{vertices[0], vertices[0]};
    for (const IntVec3& v : vertices) {
        b.lo.x = std::min(b.lo.x, v.x);
        b.lo.y = std::min(b.lo.y, v.y);
        b.lo.z = std::min(b.lo.z, v.z);
        b.hi.x = std::max(b.hi.x, v.x);
        b.hi.y = std::max(b.hi.y, v.y);
        b.hi.z = std::max(b.hi.z, v.z);
    }
    return b;
}

unsigned effective_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

struct SlabCount {
    Int closed = 0;
    Int interior = 0;
};

// Counting over z in [z0, z1]; pure, no shared state.
template <typename Member>
SlabCount scan_slab(const Box& box, Int z0, Int z1, const Member& member) {
    SlabCount out;
    for (Int z = z0; z <= z1; ++z)
        for (Int y = box.lo.y; y <= box.hi.y; ++y)
            for (Int x = box.lo.x; x <= box.hi.x; ++x) member({x, y, z}, out);
    return out;
}

// Splits [lo, hi] into at most n contiguous slabs and sums the per-slab
// results in slab order, so the total never depends on thread scheduling.
template <typename Member>
SlabCount scan_box(const Box& box, unsigned threads, const Member& member) {
    const Int z_lo = box.lo.z, z_hi = box.hi.z;
    const Int span = z_hi - z_lo + 1;
    const Int slabs = std::min<Int>(span, static_cast<Int>(effective_threads(threads)));
    if (slabs <= 1) return scan_slab(box, z_lo, z_hi, member);

    std::vector<SlabCount> results(static_cast<std::size_t>(slabs));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(slabs));
    const Int chunk = (span + slabs - 1) / slabs;
    for (Int i = 0; i < slabs; ++i) {
        const Int a = z_lo + i * chunk;
        const Int b = std::min(z_hi, a + chunk - 1);
        workers.emplace_back([&, i, a, b] {
            results[static_cast<std::size_t>(i)] = scan_slab(box, a, b, member);
        });
    }
    for (std::thread& w : workers) w.join();
    SlabCount total;
    for (const SlabCount& r : results) {
        total.closed += r.closed;
        total.interior += r.interior;
    }
    return total;
}

}  // namespace

CountResult count(const LatticePolytope& p, Int t, unsigned threads) {
    if (t < 1) throw std::invalid_argument("count: dilation must be positive");
    const LatticePolytope tp = dilate(p, t);
    const Box box = vertex_box(tp.vertices);

    const SlabCount c = scan_box(box, threads, [&](const IntVec3& pt, SlabCount& out) {
        bool closed = true, open = true;
        for (const Halfspace& h : tp.halfspaces) {
            const Wide d = wide_dot(h.normal, pt);
            if (d > h.offset) {
                closed = false;
                open = false;
                break;
            }
            if (d == h.offset) open = false;
        }
        if (closed) {
            ++out.closed;
            if (open) ++out.interior;
        }
    });
    return {c.closed, c.interior, c.closed - c.interior, t};
}

Int count_half_open_cube(const CubeMatrix& c, unsigned threads) {
    const LatticePolytope cube = cube_polytope(c);
    const Box box = vertex_box(cube.vertices);
    const Wide nn = static_cast<Wide>(c.side()) * c.side();
    const IntMat3& rows = c.rows();

    const SlabCount r = scan_box(box, threads, [&](const IntVec3& pt, SlabCount& out) {
        for (const IntVec3& row : rows.row) {
            const Wide d = wide_dot(row, pt);
            if (d < 0 || d >= nn) return;
        }
        ++out.closed;
    });
    return r.closed;
}

Int boundary_edge_interior_count(const LatticePolytope& p) {
    if (p.kind != PolytopeKind::tetrahedron)
        throw std::invalid_argument("boundary_edge_interior_count: not a tetrahedron");
    Int tau = 0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
            tau += vec_gcd(p.vertices[j] - p.vertices[i]) - 1;
    return tau;
}

}  // namespace latpoly
