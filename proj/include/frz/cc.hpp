#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frz/farey.hpp"

namespace frz {

// A maximal set of pairwise non-crossing diagonals of a convex polygon
// whose vertices are 0..n_plus_3-1 in circular order.
struct PolygonTriangulation {
    int n_plus_3 = 0;
    std::vector<std::pair<int, int>> diagonals;  // each (a, b) with a < b

    friend bool operator==(const PolygonTriangulation&,
                           const PolygonTriangulation&) = default;
};

// Range, non-crossing and maximality checks; throws DomainError.
void validate_polygon(const PolygonTriangulation& t);

// The triangles of a valid triangulation, each sorted (a, b, c).
std::vector<std::array<int, 3>> polygon_triangles(const PolygonTriangulation& t);

// Lifts of the polygon vertices under the development seeded with 0 and
// infinity: vertex i goes to v[i], every chord has unit lambda-length.
std::vector<Vec2> polygon_development(const PolygonTriangulation& t);

// Periodic integer table of the given width: rows 0..width+1 hold one
// period of width+3 entries each; the outer rows are all ones and every
// diamond satisfies a*d - b*c = 1 (a, d side by side, b above, c below).
struct CCFrieze {
    int width = 0;
    std::vector<std::vector<Int>> rows;

    friend bool operator==(const CCFrieze&, const CCFrieze&) = default;
};

// Entry (k, i) with the column index taken mod the period.
inline const Int& cc_entry(const CCFrieze& f, int k, long long i) {
    long long m = f.width + 3;
    return f.rows[k][(size_t)(((i % m) + m) % m)];
}

// Table of a triangulated polygon: develop the vertices so every side
// and diagonal has length 1; entry (k, i) is then the length of the
// chord from vertex i to vertex i+k+1.
CCFrieze cc_from_triangulation(const PolygonTriangulation& t);

// Triangle count at each vertex. As a cyclic sequence this is row 1 of
// the table read one step ahead: row1[i] counts vertex i+1.
std::vector<Int> quiddity(const PolygonTriangulation& t);

// Inverse of cc_from_triangulation: repeatedly cut an ear (a vertex
// counted once) off the quiddity row. Throws DomainError when the table
// is not a valid frieze or no ear exists.
PolygonTriangulation triangulation_from_cc(const CCFrieze& f);

// One frieze per triangulation of the (width+3)-gon; the number of them
// is the Catalan number C(width+1).
std::vector<CCFrieze> enumerate_cc(int width);

// Check border rows, positivity and every diamond in one period; returns
// the (row, index) of the first violation, or nothing when the table is
// a frieze.
std::optional<std::pair<int, int>> validate_diamond(const CCFrieze& f);

// Rotate all rows together so the table is lexicographically least;
// translates of a table share their canonical form.
CCFrieze cc_canonical(const CCFrieze& f);

struct UnimodularMatrix {
    Int a, b, c, d;  // positive entries with a*d - b*c == 1
};

struct DiamondLoc {
    int row = 0;  // entry d of the matrix sits at (row, pos); a at
    int pos = 0;  // (row, pos+1), b at (row-1, pos+1), c at (row+1, pos)
};

// Realize the matrix as a diamond of a polygon frieze: span a polygon
// between 0/1, 1/0, a/b and c/d out of the unit-tessellation triangles
// crossed by the chords 0/1--c/d and 1/0--a/b, then read the table off
// the polygon's vertices.
std::pair<CCFrieze, DiamondLoc> embed_matrix(const UnimodularMatrix& m);

// One period of the table in the staggered text layout: entry (k, i)
// sits under print column 2i + k.
std::string render_cc(const CCFrieze& f);

}  // namespace frz
