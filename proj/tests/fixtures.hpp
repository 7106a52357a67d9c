#pragma once

#include "latpoly/cube.hpp"

// The named example cubes used across suites. Row sets are exact; everything
// derived from them (profiles, polynomials, counts) is pinned in the tests.
namespace fixtures {

using latpoly::CubeMatrix;
using latpoly::Int;
using latpoly::IntMat3;
using latpoly::IntVec3;

inline IntMat3 rows(IntVec3 a, IntVec3 b, IntVec3 c) { return {{a, b, c}}; }

inline CubeMatrix C1() {
    return CubeMatrix::from_rows(rows({1, 0, 0}, {0, 1, 0}, {0, 0, 1}));
}
inline CubeMatrix C3() {
    return CubeMatrix::from_rows(rows({-1, 2, 2}, {2, -1, 2}, {2, 2, -1}));
}
inline CubeMatrix C5() {
    return CubeMatrix::from_rows(rows({4, 3, 0}, {3, -4, 0}, {0, 0, 5}));
}
inline CubeMatrix C7() {
    return CubeMatrix::from_rows(rows({-2, 6, 3}, {3, -2, 6}, {6, 3, -2}));
}
inline CubeMatrix C9() {
    return CubeMatrix::from_rows(rows({7, 4, -4}, {4, 1, 8}, {-4, 8, 1}));
}
inline CubeMatrix C11() {
    return CubeMatrix::from_rows(rows({2, 9, 6}, {9, 2, -6}, {6, -6, 7}));
}
inline CubeMatrix C13() {
    return CubeMatrix::from_rows(rows({-3, 12, 4}, {4, -3, 12}, {12, 4, -3}));
}
inline CubeMatrix C13_hat() {
    return CubeMatrix::from_rows(rows({5, 12, 0}, {12, -5, 0}, {0, 0, 13}));
}
inline CubeMatrix C1105() {
    return CubeMatrix::from_rows(
        rows({-65, 156, 1092}, {420, 1015, -120}, {1020, -408, 119}));
}

}  // namespace fixtures
