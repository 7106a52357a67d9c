#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace latpoly {

using Int = std::int64_t;
using Wide = __int128;

[[noreturn]] inline void throw_overflow(const char* where) {
    throw std::overflow_error(std::string("integer overflow in ") + where);
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
    return r;
}

inline Int checked_neg(Int a) {
    if (a == std::numeric_limits<Int>::min()) throw_overflow("neg");
    return -a;
}

// Narrow a 128-bit intermediate back to 64 bits.
inline Int narrow(Wide v, const char* where) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw_overflow(where);
    return static_cast<Int>(v);
}

inline std::uint64_t magnitude(Int a) {
    return a < 0 ? 0ULL - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
}

// gcd of magnitudes; gcd(0,0) = 0.
inline Int gcd2(Int a, Int b) {
    std::uint64_t x = magnitude(a), y = magnitude(b);
    while (y != 0) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
    }
    if (x > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) throw_overflow("gcd");
    return static_cast<Int>(x);
}

inline Int gcd3(Int a, Int b, Int c) { return gcd2(gcd2(a, b), c); }

// Exact floor square root; n must be nonnegative.
inline Int exact_isqrt(Int n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    auto sq = [](Int r) { return static_cast<Wide>(r) * r; };
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && sq(r) > n) --r;
    while (sq(r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(Int n) {
    if (n < 0) return false;
    Int r = exact_isqrt(n);
    return r * r == n;
}

struct IntVec3 {
    Int x{}, y{}, z{};

    friend bool operator==(const IntVec3&, const IntVec3&) = default;
    friend auto operator<=>(const IntVec3&, const IntVec3&) = default;

    IntVec3 operator+(const IntVec3& o) const {
        return {checked_add(x, o.x), checked_add(y, o.y), checked_add(z, o.z)};
    }
    IntVec3 operator-(const IntVec3& o) const {
        return {checked_sub(x, o.x), checked_sub(y, o.y), checked_sub(z, o.z)};
    }
    IntVec3 operator-() const { return {checked_neg(x), checked_neg(y), checked_neg(z)}; }
    IntVec3 operator*(Int k) const {
        return {checked_mul(x, k), checked_mul(y, k), checked_mul(z, k)};
    }
};

inline Int dot(const IntVec3& u, const IntVec3& v) {
    Wide s = static_cast<Wide>(u.x) * v.x + static_cast<Wide>(u.y) * v.y +
             static_cast<Wide>(u.z) * v.z;
    return narrow(s, "dot");
}

// Unchecked 128-bit dot; membership tests in the counting hot loop.
inline Wide wide_dot(const IntVec3& u, const IntVec3& v) {
    return static_cast<Wide>(u.x) * v.x + static_cast<Wide>(u.y) * v.y +
           static_cast<Wide>(u.z) * v.z;
}

inline IntVec3 cross(const IntVec3& u, const IntVec3& v) {
    return {narrow(static_cast<Wide>(u.y) * v.z - static_cast<Wide>(u.z) * v.y, "cross"),
            narrow(static_cast<Wide>(u.z) * v.x - static_cast<Wide>(u.x) * v.z, "cross"),
            narrow(static_cast<Wide>(u.x) * v.y - static_cast<Wide>(u.y) * v.x, "cross")};
}

inline Int norm_sq(const IntVec3& v) { return dot(v, v); }

inline Int vec_gcd(const IntVec3& v) { return gcd3(v.x, v.y, v.z); }

struct IntMat3 {
    std::array<IntVec3, 3> row{};

    friend bool operator==(const IntMat3&, const IntMat3&) = default;
    friend auto operator<=>(const IntMat3&, const IntMat3&) = default;
};

inline Int det3(const IntMat3& m) {
    const IntVec3 &a = m.row[0], &b = m.row[1], &c = m.row[2];
    Wide d = static_cast<Wide>(a.x) * (static_cast<Wide>(b.y) * c.z - static_cast<Wide>(b.z) * c.y) -
             static_cast<Wide>(a.y) * (static_cast<Wide>(b.x) * c.z - static_cast<Wide>(b.z) * c.x) +
             static_cast<Wide>(a.z) * (static_cast<Wide>(b.x) * c.y - static_cast<Wide>(b.y) * c.x);
    return narrow(d, "det3");
}

inline IntMat3 transpose(const IntMat3& m) {
    return {{IntVec3{m.row[0].x, m.row[1].x, m.row[2].x},
             IntVec3{m.row[0].y, m.row[1].y, m.row[2].y},
             IntVec3{m.row[0].z, m.row[1].z, m.row[2].z}}};
}

using Flat9 = std::array<Int, 9>;

inline Flat9 flatten(const IntMat3& m) {
    return {m.row[0].x, m.row[0].y, m.row[0].z, m.row[1].x, m.row[1].y,
            m.row[1].z, m.row[2].x, m.row[2].y, m.row[2].z};
}

inline IntMat3 unflatten(const Flat9& f) {
    return {{IntVec3{f[0], f[1], f[2]}, IntVec3{f[3], f[4], f[5]}, IntVec3{f[6], f[7], f[8]}}};
}

}  // namespace latpoly
