#include "frz/develop.hpp"

#include "frz/errors.hpp"

namespace frz {

std::array<Vec2, 3> seed_lifts(const IdealComplex& cx, const std::vector<Rat>& w, int tri) {
    const Rat& a = w[cx.arc_at(tri, 0)];
    const Rat& b = w[cx.arc_at(tri, 1)];
    const Rat& c = w[cx.arc_at(tri, 2)];
    Vec2 v0{c, 0}, v1{0, 1};
    Vec2 v2 = develop_third_vertex(v0, v1, b, a, Side::far_side);
    return {v0, v1, v2};
}

void LazyTiling::check_values() const {
    if ((int)w_.size() != cx_.n_arcs) throw LogicError("value table size mismatch");
    for (const Rat& v : w_)
        if (v <= 0) throw DomainError("development needs positive side values");
}

LazyTiling::LazyTiling(IdealComplex cx, std::vector<Rat> w, int root_tri)
    : cx_(std::move(cx)), w_(std::move(w)) {
    check_values();
    tiles_.push_back(Tile{root_tri, seed_lifts(cx_, w_, root_tri), {-1, -1, -1}});
}

LazyTiling::LazyTiling(IdealComplex cx, std::vector<Rat> w, int root_tri,
                       std::array<Vec2, 3> root_lifts)
    : cx_(std::move(cx)), w_(std::move(w)) {
    check_values();
    for (int s = 0; s < 3; ++s)
        if (lambda_length(root_lifts[mod3(s + 1)], root_lifts[mod3(s + 2)]) !=
            w_[cx_.arc_at(root_tri, s)])
            throw DomainError("root lifts do not realize the side values");
    tiles_.push_back(Tile{root_tri, root_lifts, {-1, -1, -1}});
}

int LazyTiling::step(int tile, int slot) {
    int memo = tiles_[tile].nbr[slot];
    if (memo >= 0) return memo;

    SlotRef g = cx_.glued({tiles_[tile].tri, slot});
    if (!g.valid()) throw DomainError("development stepped across the boundary");
    int sp = g.slot;

    Tile n;
    n.tri = g.tri;
    n.lift[mod3(sp + 1)] = tiles_[tile].lift[mod3(slot + 2)];
    n.lift[mod3(sp + 2)] = tiles_[tile].lift[mod3(slot + 1)];
    const Vec2& u = n.lift[mod3(sp + 1)];
    const Vec2& v = n.lift[mod3(sp + 2)];
    int across = side_of(u, v, tiles_[tile].lift[slot]);
    if (across == 0) throw LogicError("degenerate tile in development");
    n.lift[sp] = develop_third_vertex(u, v, w_[cx_.arc_at(g.tri, mod3(sp + 2))],
                                      w_[cx_.arc_at(g.tri, mod3(sp + 1))],
                                      across == 1 ? Side::near_side : Side::far_side);
    n.nbr[sp] = tile;

    int fresh = (int)tiles_.size();
    tiles_.push_back(std::move(n));
    tiles_[tile].nbr[slot] = fresh;
    return fresh;
}

LazyTiling::TracedArc LazyTiling::trace_arc(TileCorner from, const Vec2& target) {
    const Vec2 u0 = lift(from);
    if (same_lift(u0, target)) throw LogicError("trace endpoints coincide");
    TracedArc out;
    int t = from.tile;
    int entry = -1;
    bool crossed = false;
    for (long long guard = 0; guard < 1000000; ++guard) {
        const Tile& T = tiles_[t];
        for (int c = 0; c < 3; ++c)
            if (same_lift(T.lift[c], target)) {
                if (!crossed) {
                    // never left the fan around the start vertex, so the
                    // walk is a single wedge of this tile
                    int cu = -1;
                    for (int k = 0; k < 3; ++k)
                        if (same_lift(T.lift[k], u0)) cu = k;
                    if (cu < 0) throw LogicError("trace lost the geodesic");
                    out.start = {T.tri, cu};
                }
                out.end = {T.tri, c};
                out.end_tile = {t, c};
                return out;
            }

        int exit = -1;
        for (int s = 0; s < 3 && exit < 0; ++s)
            if (s != entry && separates(T.lift[mod3(s + 1)], T.lift[mod3(s + 2)], u0, target))
                exit = s;
        if (exit < 0) {
            // still in the fan around the start vertex: pivot toward the target
            int cu = -1;
            for (int c = 0; c < 3; ++c)
                if (same_lift(T.lift[c], u0)) cu = c;
            if (cu < 0) throw LogicError("trace lost the geodesic");
            for (int k = 1; k <= 2 && exit < 0; ++k)
                if (separates(T.lift[cu], T.lift[mod3(cu + 3 - k)], T.lift[mod3(cu + k)], target))
                    exit = mod3(cu + k);
            if (exit < 0) throw LogicError("trace cannot make progress");
        } else {
            // a strict crossing; the first one leaves through the side
            // opposite the start corner, which pins the start wedge
            if (!crossed) {
                crossed = true;
                out.start = {T.tri, exit};
            }
            out.steps.push_back({T.tri, exit});
        }
        int base_tri = tiles_[t].tri;
        int nt = step(t, exit);
        entry = cx_.glued({base_tri, exit}).slot;
        t = nt;
    }
    throw LogicError("trace exceeded its step budget");
}

}  // namespace frz
