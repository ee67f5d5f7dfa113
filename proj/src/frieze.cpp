#include "frz/frieze.hpp"

#include "frz/errors.hpp"

namespace frz {

Frieze unitary_frieze(const TaggedTriangulation& t) {
    validate_tagged(t);
    return {t, std::vector<Rat>(t.cx.n_arcs, Rat(1))};
}

void validate_frieze(const Frieze& f, bool require_integral) {
    validate_tagged(f.base);
    const IdealComplex& cx = f.base.cx;
    if ((int)f.values.size() != cx.n_arcs) throw DomainError("value table size mismatch");
    for (int a = 0; a < cx.n_arcs; ++a) {
        if (f.values[a] <= 0) throw DomainError("frieze values are positive");
        if (cx.arc_is_boundary(a) && f.values[a] != 1)
            throw DomainError("boundary arcs carry value 1");
    }
    if (require_integral && !frieze_integral(f))
        throw DomainError("frieze values are not all integers");
}

bool frieze_integral(const Frieze& f) {
    for (int a = 0; a < f.base.cx.n_arcs; ++a)
        if (!is_integer(tagged_value_of(f.base, f.values, a))) return false;
    return true;
}

Rat conjugation_factor(const IdealComplex& cx, const std::vector<Rat>& w, int puncture) {
    Rat sum = 0;
    for (int t = 0; t < (int)cx.tris.size(); ++t)
        for (int c = 0; c < 3; ++c)
            if (cx.corner_at(t, c) == puncture)
                sum += w[cx.arc_at(t, c)] /
                       (w[cx.arc_at(t, mod3(c + 1))] * w[cx.arc_at(t, mod3(c + 2))]);
    if (sum <= 0) throw DomainError("no corner at the point: not a puncture of the complex");
    return sum;
}

static int sigma_at(const TaggedTriangulation& t, int point) {
    auto it = t.sigma.find(point);
    return it == t.sigma.end() ? 1 : it->second;
}

Rat eval_path(const Frieze& f, const ArcPath& p) {
    validate_path(f.base, p);
    const IdealComplex& cx = f.base.cx;

    LazyTiling til(cx, f.values, p.start.tri);
    int t = 0;
    for (const SlotRef& s : p.steps) {
        if (til.tile(t).tri != s.tri) throw LogicError("path strayed from its crossing record");
        t = til.step(t, s.slot);
    }
    if (til.tile(t).tri != p.end.tri) throw LogicError("path strayed from its crossing record");

    Rat val = lambda_length(til.lift({0, p.start.corner}), til.lift({t, p.end.corner}));
    // reduced paths walk a tree, so the fresh endpoint can never fold back
    // onto the start lift; zero length means the development is corrupt
    if (val == 0) throw LogicError("development produced a zero length");

    if (p.start_tag != sigma_at(f.base, start_point(cx, p)))
        val *= conjugation_factor(cx, f.values, start_point(cx, p));
    if (p.end_tag != sigma_at(f.base, end_point(cx, p)))
        val *= conjugation_factor(cx, f.values, end_point(cx, p));
    return val;
}

Frieze flip_value(const Frieze& f, int arc, bool require_integral) {
    std::vector<Rat> w = f.values;
    TaggedTriangulation b = flip_tagged(f.base, arc, &w, require_integral);
    return {std::move(b), std::move(w)};
}

Rat loop_value(const Frieze& f, int arc, int puncture) {
    const IdealComplex& cx = f.base.cx;
    if (arc < 0 || arc >= cx.n_arcs) throw DomainError("no such arc");
    auto ends = cx.arc_endpoints(arc);
    if (ends[0] == ends[1]) throw DomainError("the loop needs a companion arc with distinct ends");
    if (ends[0] != puncture && ends[1] != puncture)
        throw DomainError("the companion arc does not end at the point");
    if (boundary_point_mask(cx)[puncture]) throw DomainError("loops are taken around punctures");

    SlotRef s = cx.slots_of_arc(arc)[0];
    int cP = -1, cQ = -1;
    for (int k = 1; k <= 2; ++k) {
        int c = mod3(s.slot + k);
        (cx.corner_at(s.tri, c) == puncture ? cP : cQ) = c;
    }

    // walk the fan: one wedge per corner at the puncture, then we are back
    LazyTiling til(cx, f.values, s.tri);
    int t = 0, c = cP;
    const int m = cx.valence(puncture);
    for (int i = 0; i < m; ++i) {
        int exit = mod3(c + 1);
        int base_tri = til.tile(t).tri;
        t = til.step(t, exit);
        c = mod3(cx.glued({base_tri, exit}).slot + 1);
    }
    if (til.tile(t).tri != s.tri || c != cP) throw LogicError("the fan did not close up");
    return lambda_length(til.lift({0, cQ}), til.lift({t, cQ}));
}

static Rat end_factor(const ScalingProfile& k, int point, int tag, int sigma) {
    auto it = k.find(point);
    if (it == k.end()) return 1;
    return tag == sigma ? it->second : Rat(1) / it->second;
}

static void check_profile(const IdealComplex& cx, const ScalingProfile& k) {
    auto bnd = boundary_point_mask(cx);
    for (const auto& [p, v] : k) {
        if (p < 0 || p >= cx.n_points || bnd[p])
            throw DomainError("scaling profiles assign factors to punctures only");
        if (v <= 0) throw DomainError("scaling factors are positive");
    }
}

static Frieze apply_profile(const Frieze& f, const ScalingProfile& k) {
    const IdealComplex& cx = f.base.cx;
    Frieze out = f;
    for (int a = 0; a < cx.n_arcs; ++a) {
        if (cx.arc_is_boundary(a)) continue;
        TaggedArcDesc d = tagged_arc_desc(f.base, a);
        if (cx.arc_is_sf_loop(a)) {
            // the stored value is the product of the conjugate pair, so the
            // enclosed puncture's factors cancel and the base point doubles
            int enclosed = cx.sf_puncture_of_radius(cx.sf_radius_of_loop(a));
            for (int e = 0; e < 2; ++e)
                if (d.point[e] != enclosed) {
                    Rat g = end_factor(k, d.point[e], d.tag[e], sigma_at(f.base, d.point[e]));
                    out.values[a] *= g * g;
                }
        } else {
            for (int e = 0; e < 2; ++e)
                out.values[a] *= end_factor(k, d.point[e], d.tag[e], sigma_at(f.base, d.point[e]));
        }
    }
    return out;
}

Frieze rescale(const Frieze& f, const ScalingProfile& k) {
    check_profile(f.base.cx, k);
    for (const Rat& v : f.values)
        if (v != 1) throw DomainError("rescaling starts from the unitary assignment");
    for (const auto& [p, v] : k) {
        if (v == 1) continue;
        if (!is_integer(v) || Int(f.base.cx.valence(p)) % num(v) != 0)
            throw DomainError("factor " + rat_str(v) + " at puncture " + std::to_string(p) +
                              " does not divide the valence " +
                              std::to_string(f.base.cx.valence(p)));
    }
    Frieze out = apply_profile(f, k);
    validate_frieze(out, /*require_integral=*/true);
    return out;
}

Frieze rescale_unchecked(const Frieze& f, const ScalingProfile& k) {
    check_profile(f.base.cx, k);
    Frieze out = apply_profile(f, k);
    validate_frieze(out, /*require_integral=*/false);
    return out;
}

}  // namespace frz
