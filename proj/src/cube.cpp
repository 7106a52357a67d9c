#include "latpoly/cube.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace latpoly {
namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

CubeMatrix CubeMatrix::from_rows(const IntMat3& m) {
    const Int n0 = norm_sq(m.row[0]);
    require(n0 > 0, "not a cube: zero row");
    require(norm_sq(m.row[1]) == n0 && norm_sq(m.row[2]) == n0,
            "not a cube: rows have unequal norms");
    require(dot(m.row[0], m.row[1]) == 0 && dot(m.row[1], m.row[2]) == 0 &&
                dot(m.row[0], m.row[2]) == 0,
            "not a cube: rows not orthogonal");
    const Int side = exact_isqrt(n0);
    require(side * side == n0, "not a cube: row norm is not a perfect square");
    return CubeMatrix(m, side);
}

CubeMatrix CubeMatrix::rodrigues(Int a, Int b, Int c, Int d) {
    require(a != 0 || b != 0 || c != 0 || d != 0, "rodrigues: all parameters zero");
    const Int aa = checked_mul(a, a), bb = checked_mul(b, b);
    const Int cc = checked_mul(c, c), dd = checked_mul(d, d);
    const Int scale = checked_add(checked_add(aa, bb), checked_add(cc, dd));
    const auto twice = [](Int p, Int q) { return checked_mul(2, checked_add(p, q)); };
    IntMat3 m;
    m.row[0] = {checked_sub(checked_add(aa, bb), checked_add(cc, dd)),
                twice(checked_mul(b, c), checked_mul(d, a)),
                twice(checked_mul(b, d), checked_neg(checked_mul(c, a)))};
    m.row[1] = {twice(checked_mul(b, c), checked_neg(checked_mul(d, a))),
                checked_add(checked_sub(aa, bb), checked_sub(cc, dd)),
                twice(checked_mul(c, d), checked_mul(b, a))};
    m.row[2] = {twice(checked_mul(b, d), checked_mul(c, a)),
                twice(checked_mul(c, d), checked_neg(checked_mul(b, a))),
                checked_sub(checked_sub(aa, bb), checked_sub(cc, dd))};

    Int g = scale;
    for (Int entry : flatten(m)) g = gcd2(g, entry);
    for (auto& row : m.row) row = {row.x / g, row.y / g, row.z / g};
    return from_rows(m);  // re-validates; side comes out scale / g
}

CubeMatrix CubeMatrix::pythagorean(Int a, Int b, Int c) {
    require(a > 0 && b > 0 && c > 0, "pythagorean: triple must be positive");
    require(checked_add(checked_mul(a, a), checked_mul(b, b)) == checked_mul(c, c),
            "pythagorean: a^2 + b^2 != c^2");
    require(gcd2(a, b) == 1, "pythagorean: triple not primitive");
    return from_rows({{IntVec3{a, b, 0}, IntVec3{-b, a, 0}, IntVec3{0, 0, c}}});
}

CubeMatrix CubeMatrix::scaled(Int k) const {
    require(k > 0, "scaled: factor must be positive");
    IntMat3 m;
    for (int i = 0; i < 3; ++i) m.row[i] = m_.row[i] * k;
    return CubeMatrix(m, checked_mul(side_, k));
}

DivisorProfile divisor_profile(const CubeMatrix& c) {
    const IntVec3 a = c.alpha(), b = c.beta(), g = c.gamma();
    DivisorProfile p;
    p.d = {vec_gcd(a), vec_gcd(b), vec_gcd(g)};
    for (int i = 0; i < 3; ++i) {
        if (c.side() % p.d[i] != 0)
            throw std::logic_error("divisor_profile: row gcd does not divide the side");
        p.d_prime[i] = c.side() / p.d[i];
    }
    p.D = {vec_gcd(a + b + g), vec_gcd(a + b - g), vec_gcd(a - b + g),
           vec_gcd(-a + b + g)};
    p.e = {vec_gcd(a + b), vec_gcd(b + g), vec_gcd(g + a),
           vec_gcd(a - b), vec_gcd(b - g), vec_gcd(g - a)};
    const IntMat3 t = transpose(c.rows());
    p.col = {vec_gcd(t.row[0]), vec_gcd(t.row[1]), vec_gcd(t.row[2])};
    return p;
}

const std::array<SignedPerm, 48>& signed_perm_group() {
    static const std::array<SignedPerm, 48> group = [] {
        std::array<SignedPerm, 48> g;
        std::array<int, 3> perm = {0, 1, 2};
        std::size_t i = 0;
        do {
            for (int bits = 0; bits < 8; ++bits) {
                g[i].perm = perm;
                g[i].sign = {(bits & 1) ? Int{-1} : Int{1},
                             (bits & 2) ? Int{-1} : Int{1},
                             (bits & 4) ? Int{-1} : Int{1}};
                ++i;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return g;
    }();
    return group;
}

CubeMatrix canonicalize(const CubeMatrix& c) {
    const auto& group = signed_perm_group();
    const IntMat3& m = c.rows();
    Flat9 best = flatten(m);
    // Orbit member for (P, Q): entry (r, c) = sp.sign[r] * sq.sign[c] *
    // m[sp.perm[r]][sq.perm[c]].
    for (const SignedPerm& sp : group) {
        IntMat3 left;
        for (int r = 0; r < 3; ++r) left.row[r] = m.row[sp.perm[r]] * sp.sign[r];
        for (const SignedPerm& sq : group) {
            Flat9 cand;
            for (int r = 0; r < 3; ++r) {
                const Int comp[3] = {left.row[r].x, left.row[r].y, left.row[r].z};
                for (int col = 0; col < 3; ++col)
                    cand[static_cast<std::size_t>(3 * r + col)] =
                        sq.sign[col] * comp[sq.perm[col]];
            }
            if (cand < best) best = cand;
        }
    }
    return CubeMatrix::from_rows(unflatten(best));
}

bool is_canonical(const CubeMatrix& c) { return canonicalize(c).rows() == c.rows(); }

bool is_irreducible(const CubeMatrix& c) {
    Int g = 0;
    for (Int entry : flatten(c.rows())) g = gcd2(g, entry);
    return g == 1;
}

bool is_self_dual(const CubeMatrix& c) {
    const CubeMatrix t = CubeMatrix::from_rows(transpose(c.rows()));
    return canonicalize(c).rows() == canonicalize(t).rows();
}

std::string rows_str(const IntMat3& m) {
    std::ostringstream os;
    for (int r = 0; r < 3; ++r) {
        if (r) os << ';';
        os << m.row[r].x << ',' << m.row[r].y << ',' << m.row[r].z;
    }
    return os.str();
}

IntMat3 parse_rows(const std::string& text) {
    std::array<Int, 9> vals;
    std::size_t pos = 0;
    for (int i = 0; i < 9; ++i) {
        const char expect = (i == 8) ? '\0' : (i % 3 == 2 ? ';' : ',');
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        auto [next, ec] = std::from_chars(begin, end, vals[static_cast<std::size_t>(i)]);
        if (ec != std::errc{})
            throw std::invalid_argument("matrix text: expected integer in '" + text + "'");
        pos = static_cast<std::size_t>(next - text.data());
        if (expect == '\0') {
            if (pos != text.size())
                throw std::invalid_argument("matrix text: trailing characters in '" + text + "'");
        } else {
            if (pos >= text.size() || text[pos] != expect)
                throw std::invalid_argument(
                    "matrix text: expected 'a,b,c;d,e,f;g,h,i', got '" + text + "'");
            ++pos;
        }
    }
    return unflatten(vals);
}

}  // namespace latpoly
