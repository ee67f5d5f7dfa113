#pragma once

#include <array>
#include <vector>

#include "frz/complex.hpp"
#include "frz/tagged.hpp"
#include "frz/vec.hpp"

namespace frz {

// One developed copy of a base triangle: corner lifts in a common frame,
// with memoized neighbor tiles across each side.
struct Tile {
    int tri = -1;
    std::array<Vec2, 3> lift;
    std::array<int, 3> nbr{-1, -1, -1};
};

struct TileCorner {
    int tile = -1;
    int corner = -1;
    friend auto operator<=>(const TileCorner&, const TileCorner&) = default;
};

// two lifts of the same decorated vertex (sign slack allowed)
inline bool same_lift(const Vec2& a, const Vec2& b) { return a == b || a == -b; }

// {u,v} separates {a,b} on the boundary circle (strictly)
inline bool separates(const Vec2& u, const Vec2& v, const Vec2& a, const Vec2& b) {
    return orient(u, a, v) * orient(u, b, v) == -1;
}

// Standard lifts of one triangle; the lambda length of each side comes out
// equal to the side's stored value.
std::array<Vec2, 3> seed_lifts(const IdealComplex& cx, const std::vector<Rat>& w, int tri);

// Lazily developed cover of a valued triangulation: one tile per visited
// copy of a base triangle. Interior marked points all sit at the boundary
// circle, so the dual graph of the cover is a tree and the memoized
// neighbor links name every reachable copy unambiguously.
class LazyTiling {
public:
    LazyTiling(IdealComplex cx, std::vector<Rat> w, int root_tri);
    LazyTiling(IdealComplex cx, std::vector<Rat> w, int root_tri, std::array<Vec2, 3> root_lifts);

    const IdealComplex& complex() const { return cx_; }
    const std::vector<Rat>& values() const { return w_; }
    const Tile& tile(int i) const { return tiles_[i]; }
    int size() const { return (int)tiles_.size(); }
    Vec2 lift(TileCorner a) const { return tiles_[a.tile].lift[a.corner]; }

    // neighbor tile across a slot, developed on first use
    int step(int tile, int slot);

    // A geodesic walk written down in base coordinates: the corner wedge it
    // leaves from, the sides it strictly crosses, the corner it lands on,
    // and where that landing sits in the tiling. Pivots around the start
    // vertex are not crossings and leave no step.
    struct TracedArc {
        CornerRef start, end;
        std::vector<SlotRef> steps;
        TileCorner end_tile;
    };

    // Walk the straight geodesic from a vertex lift of `from` to a tile
    // having `target` among its corner lifts. The crossing record always
    // comes out in the reduced normal form validate_path expects: the first
    // strict exit is opposite the start corner, and the landing corner is
    // the freshly developed vertex opposite the entry side.
    TracedArc trace_arc(TileCorner from, const Vec2& target);

    TileCorner trace(TileCorner from, const Vec2& target) {
        return trace_arc(from, target).end_tile;
    }

private:
    IdealComplex cx_;
    std::vector<Rat> w_;
    std::vector<Tile> tiles_;

    void check_values() const;
};

}  // namespace frz
