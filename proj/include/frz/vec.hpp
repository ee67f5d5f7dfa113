#pragma once

#include <compare>

#include "frz/errors.hpp"
#include "frz/rational.hpp"

namespace frz {

// A decorated vertex: a point of the hyperbolic boundary together with a
// horocycle, encoded as a nonzero rational 2-vector. (p,q) with q != 0 sits
// at p/q; (x,0) sits at the point at infinity. Scaling the vector scales
// the decoration, the ray through it is the point itself.
struct Vec2 {
    Rat x;
    Rat y;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    // lexicographic, only used to key ordered containers
    friend bool operator<(const Vec2& a, const Vec2& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline Rat det(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

inline bool is_zero(const Vec2& v) { return v.x == 0 && v.y == 0; }

// The length assigned to the pair of decorated vertices.
inline Rat lambda_length(const Vec2& u, const Vec2& v) {
    Rat d = det(u, v);
    return d < 0 ? Rat(-d) : d;
}

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
inline Vec2 operator*(const Rat& k, const Vec2& v) { return {k * v.x, k * v.y}; }
inline Vec2 operator/(const Vec2& v, const Rat& k) { return {v.x / k, v.y / k}; }

// Changing the decoration at a vertex scales every length at that vertex
// by the same factor. Only positive factors keep the decoration valid.
inline Vec2 rescale_vertex(const Vec2& v, const Rat& k) {
    if (k <= 0) throw DomainError("rescale_vertex: factor must be positive");
    return k * v;
}

inline int sign(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Which side of the geodesic (u,v) the point w lies on, in the frame fixed
// by the given vector lifts of u and v. Flipping the sign of a lift flips
// the answer, so callers must hold all three lifts in one frame.
inline int side_of(const Vec2& u, const Vec2& v, const Vec2& w) {
    return sign(det(u, w)) * sign(det(w, v));
}

// Sign-invariant triple orientation: unchanged when any argument is
// negated, so it is well defined on underlying points. Nonzero iff the
// three points are distinct.
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
    return sign(det(a, b)) * sign(det(b, c)) * sign(det(c, a));
}

enum class Side {
    far_side,   // side_of(u, v, w) = +1
    near_side,  // side_of(u, v, w) = -1
};

inline Side opposite(Side s) { return s == Side::far_side ? Side::near_side : Side::far_side; }

// Given lifts of the two endpoints of an edge, produce the lift of the
// apex of a triangle over that edge with prescribed lengths a = to u and
// b = to v, on the requested side. This is the one solution of the two
// length constraints on that side; every triangle developed in the plane
// comes from chaining this.
inline Vec2 develop_third_vertex(const Vec2& u, const Vec2& v, const Rat& a, const Rat& b,
                                 Side side) {
    Rat d = det(u, v);
    if (d == 0) throw DomainError("develop_third_vertex: base vertices are not distinct");
    Rat lam = d < 0 ? Rat(-d) : d;
    // side_of(u, v, w) = s independently of the sign of d, since the
    // product of the two determinants picks up d^2.
    Rat s = (side == Side::far_side) ? Rat(1) : Rat(-1);
    return (b * u + (s * a) * v) / lam;
}

// ---- Ford normal form ------------------------------------------------
//
// A lift (p,q) is Ford normal when it is a primitive integer vector with
// q > 0, or (1,0) for the point at infinity. These are exactly the lifts
// whose pairwise lengths realize the classical tessellation with unit
// values on its edges.

inline bool is_ford_normal(const Vec2& v) {
    if (!is_integer(v.x) || !is_integer(v.y)) return false;
    Int p = num(v.x), q = num(v.y);
    if (q < 0) return false;
    if (q == 0) return p == 1;
    return gcd_int(abs(p), q) == 1;
}

// Flip the sign so the vector points into the closed upper half plane,
// with (x,0) normalized to x > 0.
inline Vec2 sign_normalize(const Vec2& v) {
    if (v.y < 0 || (v.y == 0 && v.x < 0)) return -v;
    return v;
}

// gcd of the integer coordinates (the content); 0 for the zero vector.
// Requires integer coordinates.
inline Int content(const Vec2& v) {
    if (!is_integer(v.x) || !is_integer(v.y))
        throw LogicError("content: vector is not integral");
    return gcd_int(abs(num(v.x)), abs(num(v.y)));
}

}  // namespace frz
