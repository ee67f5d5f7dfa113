#pragma once

#include <array>
#include <map>
#include <vector>

#include "frz/develop.hpp"
#include "frz/frieze.hpp"

namespace frz {

// A frieze followed through a sequence of flips while keeping, for every
// triangle of the current chart, corner lifts developed in one fixed frame
// over the starting chart. The lifts always realize the current stored
// values (each flip is cross-checked against them), so any arc met along
// the way can be replayed as a crossing path against the start chart and
// evaluated there.
class FlipSession {
public:
    explicit FlipSession(Frieze start, bool require_integral = false);

    const Frieze& start() const { return start_; }
    const TaggedTriangulation& current() const { return cur_; }
    const std::vector<Rat>& values() const { return w_; }
    Frieze current_frieze() const { return {cur_, w_}; }

    void flip(int arc);

    // The tagged arc behind a current arc id, written as a path against the
    // start chart (a pair member is reported as its radius curve). Develops
    // the start tiling on demand.
    ArcPath path_of(int arc);

    // recheck every maintained side length against the stored values
    void validate_lifts() const;

private:
    Frieze start_;
    LazyTiling til_;
    TaggedTriangulation cur_;
    std::vector<Rat> w_;
    bool require_integral_;
    std::vector<std::array<Vec2, 3>> lifts_;  // per current triangle, one frame each
    std::map<int, Rat> scale_;                // decoration drift per point vs the start

    Rat scale_of(int point) const;
    void check_sides(int tri) const;
    TileCorner locate(const Vec2& u);
};

}  // namespace frz
