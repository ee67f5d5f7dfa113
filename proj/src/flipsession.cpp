#include "frz/flipsession.hpp"

#include "frz/errors.hpp"

namespace frz {

FlipSession::FlipSession(Frieze start, bool require_integral)
    : start_(std::move(start)),
      til_(start_.base.cx, start_.values, 0),
      cur_(start_.base),
      w_(start_.values),
      require_integral_(require_integral) {
    validate_frieze(start_, require_integral_);
    int n = (int)cur_.cx.tris.size();
    lifts_.resize(n);
    // develop one tile per base triangle along a spanning tree of the dual
    std::vector<bool> seen(n, false);
    std::vector<int> tile_q{0};
    seen[til_.tile(0).tri] = true;
    for (size_t head = 0; head < tile_q.size(); ++head) {
        int ti = tile_q[head];
        int bt = til_.tile(ti).tri;
        lifts_[bt] = til_.tile(ti).lift;
        for (int s = 0; s < 3; ++s) {
            SlotRef g = cur_.cx.glued({bt, s});
            if (!g.valid() || seen[g.tri]) continue;
            seen[g.tri] = true;
            tile_q.push_back(til_.step(ti, s));
        }
    }
    for (int t = 0; t < n; ++t) check_sides(t);
}

Rat FlipSession::scale_of(int point) const {
    auto it = scale_.find(point);
    return it == scale_.end() ? Rat(1) : it->second;
}

void FlipSession::check_sides(int tri) const {
    for (int s = 0; s < 3; ++s)
        if (lambda_length(lifts_[tri][mod3(s + 1)], lifts_[tri][mod3(s + 2)]) !=
            w_[cur_.cx.arc_at(tri, s)])
            throw LogicError("maintained lifts disagree with the stored values");
}

void FlipSession::validate_lifts() const {
    for (int t = 0; t < (int)cur_.cx.tris.size(); ++t) check_sides(t);
}

void FlipSession::flip(int e) {
    const IdealComplex& cx = cur_.cx;
    if (e < 0 || e >= cx.n_arcs) throw DomainError("flip: no such arc");
    if (cx.arc_is_boundary(e)) throw DomainError("flip: boundary arcs are fixed");

    int t1, t2;
    std::array<Vec2, 3> L1, L2;
    int flip_pt = -1;  // puncture whose decoration the flip switches
    Rat cfac = 1;

    if (!cx.arc_is_sf_radius(e) && !cx.arc_is_sf_loop(e)) {
        auto slots = cx.slots_of_arc(e);
        t1 = slots[0].tri;
        t2 = slots[1].tri;
        int k1 = slots[0].slot, k2 = slots[1].slot;
        int aB = cx.arc_at(t2, mod3(k2 + 1)), aC = cx.arc_at(t2, mod3(k2 + 2));
        Vec2 X1 = lifts_[t1][k1];
        Vec2 U = lifts_[t1][mod3(k1 + 1)];
        Vec2 W = lifts_[t1][mod3(k1 + 2)];
        // develop the far apex into this frame, across the shared side
        int s_in = side_of(U, W, X1);
        if (s_in == 0) throw LogicError("degenerate maintained tile");
        Vec2 X2 = develop_third_vertex(U, W, w_[aB], w_[aC],
                                       s_in == 1 ? Side::near_side : Side::far_side);
        L1 = {X1, U, X2};
        L2 = {X1, X2, W};
        // collapsing a quad onto a fold at a notched puncture switches
        // its decoration back to plain
        int aA = cx.arc_at(t1, mod3(k1 + 2)), aD = cx.arc_at(t1, mod3(k1 + 1));
        int P = -1;
        if (aA == aB) P = cx.corner_at(t1, mod3(k1 + 1));
        else if (aC == aD) P = cx.corner_at(t1, mod3(k1 + 2));
        if (P >= 0 && cur_.sigma.at(P) == -1) {
            flip_pt = P;
            cfac = conjugation_factor(cx, w_, P);
        }
    } else {
        int rho = cx.arc_is_sf_radius(e) ? e : cx.sf_radius_of_loop(e);
        auto rslots = cx.slots_of_arc(rho);
        int tsf = rslots[0].tri;
        int ls = 3 - rslots[0].slot - rslots[1].slot;
        SlotRef lout = cx.glued({tsf, ls});
        if (!lout.valid()) throw DomainError("fold loop on the boundary");
        int to = lout.tri, k = lout.slot;
        int alpha = cx.arc_at(to, mod3(k + 1)), beta = cx.arc_at(to, mod3(k + 2));
        Vec2 P = lifts_[tsf][ls];
        Vec2 Qa = lifts_[tsf][mod3(ls + 1)];
        Vec2 Qb = lifts_[tsf][mod3(ls + 2)];
        // the outer corner developed across the loop side, away from the
        // enclosed puncture
        int s_in = side_of(Qa, Qb, P);
        if (s_in == 0) throw LogicError("degenerate maintained tile");
        Vec2 X = develop_third_vertex(Qa, Qb, w_[alpha], w_[beta],
                                      s_in == 1 ? Side::near_side : Side::far_side);
        t1 = tsf;
        t2 = to;
        L1 = {P, Qa, X};
        L2 = {P, X, Qb};
        if (e == rho) {  // flipping the plain member notches the puncture
            flip_pt = cx.corner_at(tsf, ls);
            cfac = conjugation_factor(cx, w_, flip_pt);
        }
    }

    cur_ = flip_tagged(cur_, e, &w_, require_integral_);
    lifts_[t1] = L1;
    lifts_[t2] = L2;
    if (flip_pt >= 0) {
        // switching the decoration at a puncture scales every length there
        for (int t = 0; t < (int)cur_.cx.tris.size(); ++t)
            for (int c = 0; c < 3; ++c)
                if (cur_.cx.corner_at(t, c) == flip_pt)
                    lifts_[t][c] = rescale_vertex(lifts_[t][c], cfac);
        scale_[flip_pt] = scale_of(flip_pt) * cfac;
    }
    check_sides(t1);
    check_sides(t2);
}

TileCorner FlipSession::locate(const Vec2& u) {
    for (int c = 0; c < 3; ++c)
        if (same_lift(til_.lift({0, c}), u)) return {0, c};
    return til_.trace({0, 0}, u);
}

ArcPath FlipSession::path_of(int arc) {
    const IdealComplex& cx = cur_.cx;
    if (arc < 0 || arc >= cx.n_arcs) throw DomainError("path_of: no such arc");
    TaggedArcDesc d = tagged_arc_desc(cur_, arc);
    int use = cx.arc_is_sf_loop(arc) ? cx.sf_radius_of_loop(arc) : arc;
    SlotRef s = cx.slots_of_arc(use)[0];
    int c1 = mod3(s.slot + 1), c2 = mod3(s.slot + 2);
    int p1 = cx.corner_at(s.tri, c1), p2 = cx.corner_at(s.tri, c2);
    int tag1 = (p1 == d.point[0]) ? d.tag[0] : d.tag[1];
    int tag2 = (p2 == d.point[1]) ? d.tag[1] : d.tag[0];
    // undo the decoration drift so the endpoints live in the start frame
    Vec2 u = rescale_vertex(lifts_[s.tri][c1], 1 / scale_of(p1));
    Vec2 v = rescale_vertex(lifts_[s.tri][c2], 1 / scale_of(p2));
    LazyTiling::TracedArc tr = til_.trace_arc(locate(u), v);
    return ArcPath{tr.start, tr.end, std::move(tr.steps), tag1, tag2};
}

}  // namespace frz
