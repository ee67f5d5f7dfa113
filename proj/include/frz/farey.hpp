#pragma once

#include <array>
#include <vector>

#include "frz/vec.hpp"

namespace frz {

// Order on underlying points: rationals by value, the point at infinity
// last. Arguments must be Ford normal (y >= 0, so the value comparison is
// a plain cross product).
bool point_less(const Vec2& a, const Vec2& b);

// One triangle of the unit tessellation: three Ford-normal vertices,
// pairwise length 1, stored sorted by point_less.
struct FareyTriangle {
    std::array<Vec2, 3> v;

    friend bool operator==(const FareyTriangle&, const FareyTriangle&) = default;
};

FareyTriangle make_farey_triangle(Vec2 a, Vec2 b, Vec2 c);

// Reduce an arbitrary nonzero rational vector to the Ford-normal lift of
// its underlying point.
Vec2 ford_normal_lift(const Vec2& v);

// The ordered run of tessellation triangles crossed by the geodesic from
// s to t. Empty iff lambda(s,t) = 1 (the geodesic is an edge already).
// Consecutive triangles share an edge; the first has s as a vertex, the
// last has t as a vertex.
std::vector<FareyTriangle> farey_path(const Vec2& s, const Vec2& t);

}  // namespace frz
