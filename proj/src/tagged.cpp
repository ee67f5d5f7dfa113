#include "frz/tagged.hpp"

#include <algorithm>
#include <set>

#include "frz/errors.hpp"

namespace frz {

std::vector<int> puncture_list(const IdealComplex& cx) {
    auto on_boundary = boundary_point_mask(cx);
    std::vector<int> out;
    for (int p = 0; p < cx.n_points; ++p)
        if (!on_boundary[p]) out.push_back(p);
    return out;
}

std::vector<int> pair_punctures(const IdealComplex& cx) {
    std::set<int> got;
    for (int a = 0; a < cx.n_arcs; ++a)
        if (cx.arc_is_sf_radius(a)) got.insert(cx.sf_puncture_of_radius(a));
    return {got.begin(), got.end()};
}

void validate_tagged(const TaggedTriangulation& t) {
    validate_complex(t.cx);
    auto punct = puncture_list(t.cx);
    if (t.sigma.size() != punct.size())
        throw DomainError("tag signs must be given for punctures exactly");
    for (int p : punct) {
        auto it = t.sigma.find(p);
        if (it == t.sigma.end()) throw DomainError("missing tag sign for a puncture");
        if (it->second != 1 && it->second != -1) throw DomainError("tag sign must be +1 or -1");
    }
    for (int p : pair_punctures(t.cx))
        if (t.sigma.at(p) != 1)
            throw DomainError("puncture enclosed by a fold must keep tag sign +1");
}

TaggedTriangulation ideal_to_tagged(const IdealComplex& cx) {
    TaggedTriangulation t{cx, {}};
    for (int p : puncture_list(cx)) t.sigma[p] = 1;
    return t;
}

static int end_tag_at(const TaggedTriangulation& t, const std::vector<bool>& on_boundary, int point) {
    return on_boundary[point] ? 1 : t.sigma.at(point);
}

TaggedArcDesc tagged_arc_desc(const TaggedTriangulation& t, int arc) {
    const auto& cx = t.cx;
    auto on_boundary = boundary_point_mask(cx);
    TaggedArcDesc d;
    d.arc = arc;
    if (cx.arc_is_sf_radius(arc) || cx.arc_is_sf_loop(arc)) {
        int rho = cx.arc_is_sf_radius(arc) ? arc : cx.sf_radius_of_loop(arc);
        auto slots = cx.slots_of_arc(rho);
        int tri = slots[0].tri;
        int ls = 3 - slots[0].slot - slots[1].slot;
        int P = cx.corner_at(tri, ls);
        int Q = cx.corner_at(tri, mod3(ls + 1));
        d.point = {Q, P};
        d.tag = {end_tag_at(t, on_boundary, Q), cx.arc_is_sf_radius(arc) ? 1 : -1};
    } else {
        auto slots = cx.slots_of_arc(arc);
        int tri = slots[0].tri, s = slots[0].slot;
        int p = cx.corner_at(tri, mod3(s + 1)), q = cx.corner_at(tri, mod3(s + 2));
        d.point = {p, q};
        d.tag = {end_tag_at(t, on_boundary, p), end_tag_at(t, on_boundary, q)};
    }
    return d;
}

int epsilon_of_desc(const TaggedArcDesc& d, int point) {
    int e = 0;
    for (int i = 0; i < 2; ++i)
        if (d.point[i] == point) e += d.tag[i];
    return e;
}

Rat tagged_value_of(const TaggedTriangulation& t, const std::vector<Rat>& w, int arc) {
    if (t.cx.arc_is_sf_loop(arc)) return w[arc] / w[t.cx.sf_radius_of_loop(arc)];
    return w[arc];
}

std::string canonical_key(const TaggedTriangulation& t, const std::vector<Rat>* w) {
    std::vector<std::string> payload(t.cx.n_arcs);
    for (int a = 0; a < t.cx.n_arcs; ++a) {
        auto d = tagged_arc_desc(t, a);
        // order the ends by point id so the key does not depend on which
        // slot of the arc is listed first
        if (d.point[0] > d.point[1] || (d.point[0] == d.point[1] && d.tag[0] < d.tag[1]))
            std::swap(d.tag[0], d.tag[1]);
        std::string s = w ? rat_str((*w)[a]) : std::string();
        s += d.tag[0] > 0 ? "#+" : "#-";
        s += d.tag[1] > 0 ? "+" : "-";
        payload[a] = std::move(s);
    }
    return canonical_encoding(t.cx, payload);
}

// ---- flips -------------------------------------------------------------

namespace {

void check_positive(const Rat& v, const char* what) {
    if (v <= 0) throw DomainError(std::string("flip needs positive values: ") + what);
}

void check_integral(const Rat& v, bool required) {
    if (required && !is_integer(v))
        throw DomainError("non-exact division (the assignment is not an integral frieze value set)");
}

// Rewrite two triangles in place and reconnect the surviving sides.
// ren maps each surviving old slot to its slot in the rewritten triangles;
// partners must be captured before the triangles are overwritten.
void reconnect(IdealComplex& cx, const std::map<SlotRef, SlotRef>& ren,
               const std::map<SlotRef, SlotRef>& old_partner) {
    for (const auto& [o, n] : ren) {
        SlotRef p = old_partner.at(o);
        if (!p.valid()) {
            cx.tris[n.tri].glue[n.slot] = SlotRef{};
            continue;
        }
        auto it = ren.find(p);
        SlotRef q = it != ren.end() ? it->second : p;
        cx.tris[n.tri].glue[n.slot] = q;
        cx.tris[q.tri].glue[q.slot] = n;
    }
}

TaggedTriangulation flip_quad(const TaggedTriangulation& t, int e, std::vector<Rat>* w,
                              bool require_integral) {
    const auto& cx = t.cx;
    auto slots = cx.slots_of_arc(e);
    int t1 = slots[0].tri, k1 = slots[0].slot;
    int t2 = slots[1].tri, k2 = slots[1].slot;

    int X1 = cx.corner_at(t1, k1), X2 = cx.corner_at(t2, k2);
    int U = cx.corner_at(t1, mod3(k1 + 1)), W = cx.corner_at(t1, mod3(k1 + 2));

    SlotRef sA{t1, mod3(k1 + 2)}, sB{t2, mod3(k2 + 1)};  // X1-U, U-X2
    SlotRef sC{t2, mod3(k2 + 2)}, sD{t1, mod3(k1 + 1)};  // X2-W, W-X1
    int aA = cx.arc_at(sA), aB = cx.arc_at(sB), aC = cx.arc_at(sC), aD = cx.arc_at(sD);

    std::map<SlotRef, SlotRef> ren{
        {sA, {t1, 2}}, {sB, {t1, 0}}, {sC, {t2, 0}}, {sD, {t2, 1}}};
    std::map<SlotRef, SlotRef> old_partner;
    for (const auto& [o, n] : ren) old_partner[o] = cx.glued(o);

    TaggedTriangulation out = t;
    auto& c2 = out.cx;
    c2.tris[t1].corner = {X1, U, X2};
    c2.tris[t1].arc = {aB, e, aA};
    c2.tris[t2].corner = {X1, X2, W};
    c2.tris[t2].arc = {aC, aD, e};
    c2.tris[t1].glue = {SlotRef{}, SlotRef{t2, 2}, SlotRef{}};
    c2.tris[t2].glue = {SlotRef{}, SlotRef{}, SlotRef{t1, 1}};
    reconnect(c2, ren, old_partner);

    bool fold1 = aA == aB, fold2 = aC == aD;
    if (fold1 && fold2) throw LogicError("flip produced two folds at once");

    Rat w_f;
    if (w) {
        for (int a : {aA, aB, aC, aD, e}) check_positive((*w)[a], "quad side");
        w_f = ((*w)[aA] * (*w)[aC] + (*w)[aB] * (*w)[aD]) / (*w)[e];
    }

    if (fold1 || fold2) {
        int P = fold1 ? U : W;
        int radius = fold1 ? aA : aC;
        int t_old = out.sigma.at(P);
        Rat member;
        if (w) {
            member = w_f / (*w)[radius];
            check_integral(member, require_integral);
        }
        if (t_old == -1) {
            // The loop side stands for the notched member, which here is
            // the surviving arc; the plain member is the replacement and
            // must carry the flipped id, so the two sides trade ids.
            for (int tt : {t1, t2})
                for (int s = 0; s < 3; ++s) {
                    int& a = out.cx.tris[tt].arc[s];
                    if (a == e) a = radius;
                    else if (a == radius) a = e;
                }
            if (w) {
                (*w)[e] = member;
                (*w)[radius] = w_f;
            }
        } else if (w) {
            (*w)[e] = w_f;
        }
        out.sigma[P] = 1;
    } else if (w) {
        check_integral(w_f, require_integral);
        (*w)[e] = w_f;
    }
    return out;
}

TaggedTriangulation flip_digon(const TaggedTriangulation& t, int e, std::vector<Rat>* w,
                               bool require_integral) {
    const auto& cx = t.cx;
    int rho = cx.arc_is_sf_radius(e) ? e : cx.sf_radius_of_loop(e);
    int l = cx.sf_loop_of_radius(rho);
    auto rslots = cx.slots_of_arc(rho);
    int tsf = rslots[0].tri;
    int ls = 3 - rslots[0].slot - rslots[1].slot;
    int P = cx.corner_at(tsf, ls);

    SlotRef lout = cx.glued({tsf, ls});
    if (!lout.valid()) throw DomainError("fold loop on the boundary");
    int to = lout.tri, k = lout.slot;
    int X = cx.corner_at(to, k);
    int Q = cx.corner_at(to, mod3(k + 1));
    SlotRef s_alpha{to, mod3(k + 1)}, s_beta{to, mod3(k + 2)};
    int alpha = cx.arc_at(s_alpha), beta = cx.arc_at(s_beta);

    int tag = e == rho ? 1 : -1;       // tag of the member being flipped
    int id_new = e, id_rem = e == rho ? l : rho;

    std::map<SlotRef, SlotRef> ren{{s_alpha, {tsf, 0}}, {s_beta, {to, 0}}};
    std::map<SlotRef, SlotRef> old_partner;
    for (const auto& [o, n] : ren) old_partner[o] = cx.glued(o);

    TaggedTriangulation out = t;
    auto& c2 = out.cx;
    c2.tris[tsf].corner = {P, Q, X};
    c2.tris[tsf].arc = {alpha, id_new, id_rem};
    c2.tris[to].corner = {P, X, Q};
    c2.tris[to].arc = {beta, id_rem, id_new};
    c2.tris[tsf].glue = {SlotRef{}, SlotRef{to, 2}, SlotRef{to, 1}};
    c2.tris[to].glue = {SlotRef{}, SlotRef{tsf, 2}, SlotRef{tsf, 1}};
    reconnect(c2, ren, old_partner);

    if (w) {
        for (int a : {alpha, beta, rho, l}) check_positive((*w)[a], "digon side");
        Rat v_flip = tag == 1 ? (*w)[rho] : (*w)[l] / (*w)[rho];
        Rat v_rem = tag == 1 ? (*w)[l] / (*w)[rho] : (*w)[rho];
        Rat v_new = ((*w)[alpha] + (*w)[beta]) / v_flip;
        check_integral(v_new, require_integral);
        check_integral(v_rem, require_integral);
        (*w)[id_new] = v_new;
        (*w)[id_rem] = v_rem;
    }
    out.sigma[P] = -tag;
    return out;
}

}  // namespace

TaggedTriangulation flip_tagged(const TaggedTriangulation& t, int arc, std::vector<Rat>* w,
                                bool require_integral) {
    if (arc < 0 || arc >= t.cx.n_arcs) throw DomainError("no such arc");
    if (t.cx.arc_is_boundary(arc)) throw DomainError("boundary arcs cannot be flipped");
    if (w && (int)w->size() != t.cx.n_arcs) throw LogicError("value table size mismatch");
    if (t.cx.arc_is_sf_radius(arc) || t.cx.arc_is_sf_loop(arc))
        return flip_digon(t, arc, w, require_integral);
    return flip_quad(t, arc, w, require_integral);
}

// ---- arc paths ---------------------------------------------------------

void validate_path(const TaggedTriangulation& t, const ArcPath& p) {
    const auto& cx = t.cx;
    auto corner_ok = [&](const CornerRef& c) {
        return c.tri >= 0 && c.tri < (int)cx.tris.size() && c.corner >= 0 && c.corner < 3;
    };
    if (!corner_ok(p.start) || !corner_ok(p.end)) throw DomainError("path corner out of range");
    if (p.start_tag * p.start_tag != 1 || p.end_tag * p.end_tag != 1)
        throw DomainError("path tags must be +1 or -1");

    if (p.steps.empty()) {
        if (p.start.tri != p.end.tri || p.start.corner == p.end.corner)
            throw DomainError("a no-crossing path joins two corners of one triangle");
    } else {
        if (p.steps.front().tri != p.start.tri || p.steps.front().slot != p.start.corner)
            throw DomainError("path must leave through the side opposite its start corner");
        for (size_t i = 0; i < p.steps.size(); ++i) {
            const SlotRef& s = p.steps[i];
            if (s.tri < 0 || s.tri >= (int)cx.tris.size() || s.slot < 0 || s.slot >= 3)
                throw DomainError("path slot out of range");
            SlotRef g = cx.glued(s);
            if (!g.valid()) throw DomainError("path crosses a boundary side");
            if (i + 1 < p.steps.size()) {
                if (p.steps[i + 1].tri != g.tri) throw DomainError("path steps do not chain");
                if (p.steps[i + 1].slot == g.slot)
                    throw DomainError("path backtracks through the side it entered");
            } else {
                if (p.end.tri != g.tri || p.end.corner != g.slot)
                    throw DomainError("path must end at the corner opposite its entry side");
            }
        }
    }
    auto on_boundary = boundary_point_mask(cx);
    if (on_boundary[start_point(cx, p)] && p.start_tag != 1)
        throw DomainError("boundary ends cannot be notched");
    if (on_boundary[end_point(cx, p)] && p.end_tag != 1)
        throw DomainError("boundary ends cannot be notched");
}

ArcPath reverse_path(const IdealComplex& cx, const ArcPath& p) {
    ArcPath r;
    r.start = p.end;
    r.end = p.start;
    r.start_tag = p.end_tag;
    r.end_tag = p.start_tag;
    r.steps.reserve(p.steps.size());
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) r.steps.push_back(cx.glued(*it));
    return r;
}

ArcPath canonical_path(const IdealComplex& cx, const ArcPath& p) {
    if (!p.steps.empty()) {
        ArcPath r = reverse_path(cx, p);
        return std::min(p, r);
    }
    int slot = 3 - p.start.corner - p.end.corner;
    int arc = cx.arc_at({p.start.tri, slot});
    auto slots = cx.slots_of_arc(arc);
    // Geometric end "A" is corner slot+1 seen from slots[0] and corner
    // slot+2 seen from the partner slot.
    int tagA, tagB;
    bool start_is_A =
        (p.start.tri == slots[0].tri && p.start.corner == mod3(slots[0].slot + 1)) ||
        (slots.size() > 1 && p.start.tri == slots[1].tri &&
         p.start.corner == mod3(slots[1].slot + 2));
    if (start_is_A) {
        tagA = p.start_tag;
        tagB = p.end_tag;
    } else {
        tagA = p.end_tag;
        tagB = p.start_tag;
    }
    ArcPath best;
    bool first = true;
    for (size_t i = 0; i < slots.size(); ++i) {
        int tri = slots[i].tri, s = slots[i].slot;
        int ca = i == 0 ? mod3(s + 1) : mod3(s + 2);
        int cb = i == 0 ? mod3(s + 2) : mod3(s + 1);
        ArcPath fwd{{tri, ca}, {tri, cb}, {}, tagA, tagB};
        ArcPath rev{{tri, cb}, {tri, ca}, {}, tagB, tagA};
        for (const ArcPath& cand : {fwd, rev})
            if (first || cand < best) {
                best = cand;
                first = false;
            }
    }
    return best;
}

ArcPath base_arc_path(const TaggedTriangulation& t, int arc) {
    const auto& cx = t.cx;
    auto d = tagged_arc_desc(t, arc);
    ArcPath p;
    if (cx.arc_is_sf_radius(arc) || cx.arc_is_sf_loop(arc)) {
        int rho = cx.arc_is_sf_radius(arc) ? arc : cx.sf_radius_of_loop(arc);
        auto slots = cx.slots_of_arc(rho);
        int tri = slots[0].tri;
        int ls = 3 - slots[0].slot - slots[1].slot;
        int cq = mod3(slots[0].slot + 1) == ls ? mod3(slots[0].slot + 2) : mod3(slots[0].slot + 1);
        p = ArcPath{{tri, cq}, {tri, ls}, {}, d.tag[0], d.tag[1]};
    } else {
        auto slots = cx.slots_of_arc(arc);
        int tri = slots[0].tri, s = slots[0].slot;
        p = ArcPath{{tri, mod3(s + 1)}, {tri, mod3(s + 2)}, {}, d.tag[0], d.tag[1]};
    }
    return canonical_path(cx, p);
}

int start_point(const IdealComplex& cx, const ArcPath& p) {
    return cx.corner_at(p.start.tri, p.start.corner);
}

int end_point(const IdealComplex& cx, const ArcPath& p) {
    return cx.corner_at(p.end.tri, p.end.corner);
}

int path_epsilon(const IdealComplex& cx, const ArcPath& p, int point) {
    int e = 0;
    if (start_point(cx, p) == point) e += p.start_tag;
    if (end_point(cx, p) == point) e += p.end_tag;
    return e;
}

}  // namespace frz
