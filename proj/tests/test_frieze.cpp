#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "frz/fixtures.hpp"
#include "frz/frieze.hpp"

using namespace frz;
using namespace frz::fixtures;

static std::vector<int> interior_arcs(const TaggedTriangulation& t) {
    std::vector<int> out;
    for (int a = 0; a < t.cx.n_arcs; ++a)
        if (!t.cx.arc_is_boundary(a)) out.push_back(a);
    return out;
}

static int arc_joining(const IdealComplex& cx, int p, int q) {
    for (int a = 0; a < cx.n_arcs; ++a) {
        auto e = cx.arc_endpoints(a);
        if ((e[0] == p && e[1] == q) || (e[0] == q && e[1] == p)) return a;
    }
    throw LogicError("no arc with those endpoints");
}

static Frieze scramble(Frieze f, int flips, unsigned seed) {
    std::mt19937 rng(seed);
    for (int i = 0; i < flips; ++i) {
        auto arcs = interior_arcs(f.base);
        f = flip_value(f, arcs[rng() % arcs.size()], true);
    }
    return f;
}

// the curve of a base arc with a chosen tag at one endpoint
static ArcPath path_tagged_at(const TaggedTriangulation& t, int arc, int at, int tag) {
    ArcPath p = base_arc_path(t, arc);
    if (start_point(t.cx, p) == at)
        p.start_tag = tag;
    else
        p.end_tag = tag;
    return p;
}

// Value of the rim<->puncture curve with the given tag at the puncture,
// whether the state keeps it as an arc of the base or folded away.
static Rat rim_curve_value(const Frieze& f, int rim, int punct, int tag) {
    const IdealComplex& cx = f.base.cx;
    for (int a = 0; a < cx.n_arcs; ++a) {
        if (cx.arc_is_sf_loop(a)) continue;
        auto d = tagged_arc_desc(f.base, a);
        bool match = (d.point[0] == rim && d.point[1] == punct) ||
                     (d.point[1] == rim && d.point[0] == punct);
        if (!match) continue;
        return eval_path(f, path_tagged_at(f.base, a, punct, tag));
    }
    // not an arc of this chart: the curve enters the fold through its loop side
    for (int a = 0; a < cx.n_arcs; ++a) {
        if (!cx.arc_is_sf_loop(a)) continue;
        int r = cx.sf_radius_of_loop(a);
        if (cx.sf_puncture_of_radius(r) != punct) continue;
        int fold_tri = cx.slots_of_arc(r)[0].tri;
        auto sl = cx.slots_of_arc(a);
        SlotRef outer = sl[0].tri == fold_tri ? sl[1] : sl[0];
        if (cx.corner_at(outer.tri, outer.slot) != rim) continue;
        SlotRef in = cx.glued(outer);
        ArcPath p{{outer.tri, outer.slot}, {in.tri, in.slot}, {outer}, 1, tag};
        return eval_path(f, p);
    }
    throw LogicError("no route for the requested curve");
}

TEST_CASE("unitary friezes validate") {
    for (const IdealComplex& cx :
         {disc_fan(4), annulus(2, 2), punctured_annulus(), polygon_disc(5)}) {
        auto f = unitary_frieze(ideal_to_tagged(cx));
        CHECK_NOTHROW(validate_frieze(f, true));
        CHECK(frieze_integral(f));
    }

    auto f = unitary_frieze(ideal_to_tagged(disc_fan(3)));
    auto bad = f;
    bad.values.pop_back();
    CHECK_THROWS_AS(validate_frieze(bad, false), DomainError);
    bad = f;
    bad.values[arc_joining(bad.base.cx, 0, 1)] = 2;  // a rim arc
    CHECK_THROWS_AS(validate_frieze(bad, false), DomainError);
    bad = f;
    bad.values[arc_joining(bad.base.cx, 0, 3)] = 0;
    CHECK_THROWS_AS(validate_frieze(bad, false), DomainError);
    bad = f;
    bad.values[arc_joining(bad.base.cx, 0, 3)] = Rat(3, 2);
    CHECK_NOTHROW(validate_frieze(bad, false));
    CHECK(!frieze_integral(bad));
    CHECK_THROWS_AS(validate_frieze(bad, true), DomainError);
}

TEST_CASE("conjugation factor of a unitary state is the valence") {
    for (const IdealComplex& cx : {disc_fan(3), disc_fan(6), punctured_annulus(),
                                   once_punctured_torus(), genus2_surface()}) {
        auto t = ideal_to_tagged(cx);
        auto w = std::vector<Rat>(cx.n_arcs, 1);
        for (int p : puncture_list(cx)) CHECK(conjugation_factor(cx, w, p) == cx.valence(p));
    }
    auto dig = once_punctured_digon();
    CHECK(conjugation_factor(dig, std::vector<Rat>(dig.n_arcs, 1), 2) == 2);

    auto t4 = four_punctured_torus();
    auto w4 = std::vector<Rat>(t4.n_arcs, 1);
    int expect[] = {8, 4, 8, 4};
    for (int i = 0; i < 4; ++i)
        CHECK(conjugation_factor(t4, w4, checkerboard_points[i]) == expect[i]);

    CHECK_THROWS_AS(conjugation_factor(t4, w4, 99), DomainError);
}

TEST_CASE("base arcs evaluate to their stored values") {
    unsigned seed = 20240812;
    for (const IdealComplex& cx :
         {disc_fan(2), disc_fan(3), disc_fan(5), annulus(2, 2), punctured_annulus(),
          once_punctured_torus(), four_punctured_torus(), genus2_surface(), polygon_disc(5)}) {
        for (int depth : {0, 4, 8}) {
            auto f = scramble(unitary_frieze(ideal_to_tagged(cx)), depth, ++seed);
            for (int a = 0; a < f.base.cx.n_arcs; ++a) {
                if (f.base.cx.arc_is_boundary(a)) continue;
                CAPTURE(depth);
                CAPTURE(a);
                CHECK(eval_path(f, base_arc_path(f.base, a)) ==
                      tagged_value_of(f.base, f.values, a));
            }
        }
    }
}

TEST_CASE("polygon chords by development") {
    // quadrilateral: the crossing diagonal
    auto q = unitary_frieze(ideal_to_tagged(polygon_disc(4)));
    ArcPath diag{{0, 1}, {1, 2}, {SlotRef{0, 1}}, 1, 1};
    CHECK(eval_path(q, diag) == 2);
    CHECK(eval_path(q, reverse_path(q.base.cx, diag)) == 2);

    // the same curve by flipping the base diagonal
    int e = interior_arcs(q.base)[0];
    auto flipped = flip_value(q, e, true);
    CHECK(flipped.values[e] == 2);

    // pentagon: a chord two crossings deep
    auto p = unitary_frieze(ideal_to_tagged(polygon_disc(5)));
    ArcPath chord{{0, 1}, {2, 2}, {SlotRef{0, 1}, SlotRef{1, 1}}, 1, 1};
    CHECK(start_point(p.base.cx, chord) == 1);
    CHECK(end_point(p.base.cx, chord) == 4);
    CHECK(eval_path(p, chord) == 3);
    CHECK(eval_path(p, reverse_path(p.base.cx, chord)) == 3);

    // crossing a fan the long way round inside a punctured disc
    auto d = unitary_frieze(ideal_to_tagged(disc_fan(3)));
    ArcPath around{{2, 1}, {1, 0}, {SlotRef{2, 1}}, 1, 1};
    CHECK(start_point(d.base.cx, around) == 0);
    CHECK(end_point(d.base.cx, around) == 1);
    CHECK(eval_path(d, around) == 2);
}

TEST_CASE("the diamond rule recovers the missing entry") {
    auto t = ideal_to_tagged(polygon_disc(4));
    const auto& cx = t.cx;
    std::vector<Rat> w(cx.n_arcs, 1);
    int e = interior_arcs(t)[0];  // the 0-2 diagonal
    w[e] = 2;
    w[arc_joining(cx, 0, 1)] = 3;
    w[arc_joining(cx, 2, 3)] = 3;
    Frieze f{t, w};
    auto g = flip_value(f, e, true);
    CHECK(g.values[e] == 5);  // (3*3 + 1*1) / 2
    auto back = flip_value(g, e, true);
    CHECK(back.values == f.values);
}

TEST_CASE("digon cycle: one structure, four charts") {
    auto s0 = unitary_frieze(ideal_to_tagged(once_punctured_digon()));
    auto s1 = flip_value(s0, 1, true);
    auto s2 = flip_value(s1, 0, true);
    auto s3 = flip_value(s2, 1, true);
    auto s4 = flip_value(s3, 0, true);
    CHECK(s4.values == s0.values);
    CHECK(canonical_key(s4.base, &s4.values) == canonical_key(s0.base, &s0.values));

    // every chart assigns the same values to the same four tagged curves
    for (const Frieze& f : {s0, s1, s2, s3}) {
        for (int rim : {0, 1}) {
            CAPTURE(rim);
            CHECK(rim_curve_value(f, rim, 2, 1) == 1);
            CHECK(rim_curve_value(f, rim, 2, -1) == 2);
        }
    }
    CHECK(conjugation_factor(s0.base.cx, s0.values, 2) == 2);
    CHECK(conjugation_factor(s1.base.cx, s1.values, 2) == 2);
    CHECK(conjugation_factor(s2.base.cx, s2.values, 2) == Rat(1, 2));
    CHECK(conjugation_factor(s3.base.cx, s3.values, 2) == 2);
}

TEST_CASE("loops around punctures") {
    // explicit two-crossing loop at rim vertex 0 of the fan
    auto d = unitary_frieze(ideal_to_tagged(disc_fan(3)));
    ArcPath loop{{0, 0}, {2, 1}, {SlotRef{0, 0}, SlotRef{1, 0}}, 1, 1};
    CHECK(start_point(d.base.cx, loop) == 0);
    CHECK(end_point(d.base.cx, loop) == 0);
    CHECK(eval_path(d, loop) == 3);
    CHECK(loop_value(d, arc_joining(d.base.cx, 0, 3), 3) == 3);

    // unitary loop value = valence, wherever a companion arc exists
    for (const IdealComplex& cx : {disc_fan(3), disc_fan(4), disc_fan(6), punctured_annulus(),
                                   four_punctured_torus(), genus2_surface()}) {
        auto f = unitary_frieze(ideal_to_tagged(cx));
        for (int a = 0; a < cx.n_arcs; ++a) {
            auto e = cx.arc_endpoints(a);
            if (e[0] == e[1]) continue;
            for (int p : puncture_list(cx))
                if (e[0] == p || e[1] == p) {
                    CAPTURE(a);
                    CHECK(loop_value(f, a, p) == cx.valence(p));
                }
        }
    }

    auto f3 = unitary_frieze(ideal_to_tagged(disc_fan(3)));
    CHECK_THROWS_AS(loop_value(f3, arc_joining(f3.base.cx, 0, 1), 3), DomainError);
    CHECK_THROWS_AS(loop_value(f3, arc_joining(f3.base.cx, 0, 3), 0), DomainError);
    auto ft = unitary_frieze(ideal_to_tagged(once_punctured_torus()));
    CHECK_THROWS_AS(loop_value(ft, 0, 0), DomainError);
}

TEST_CASE("conjugate members multiply to the loop") {
    unsigned seed = 7340;
    for (const IdealComplex& cx : {disc_fan(3), disc_fan(4), punctured_annulus(),
                                   once_punctured_digon(), four_punctured_torus()}) {
        for (int depth : {0, 6}) {
            auto f = scramble(unitary_frieze(ideal_to_tagged(cx)), depth, ++seed);
            const auto& b = f.base.cx;
            for (int a = 0; a < b.n_arcs; ++a) {
                auto e = b.arc_endpoints(a);
                if (e[0] == e[1] || b.arc_is_boundary(a) || b.arc_is_sf_loop(a)) continue;
                for (int p : puncture_list(b)) {
                    if (e[0] != p && e[1] != p) continue;
                    auto plain = path_tagged_at(f.base, a, p, 1);
                    auto notched = path_tagged_at(f.base, a, p, -1);
                    CAPTURE(depth);
                    CAPTURE(a);
                    CHECK(eval_path(f, plain) * eval_path(f, notched) == loop_value(f, a, p));
                }
            }
        }
    }
}

TEST_CASE("every reduced path on the unitary torus has a positive integer value") {
    auto f = unitary_frieze(ideal_to_tagged(once_punctured_torus()));
    const auto& cx = f.base.cx;
    std::vector<std::vector<SlotRef>> frontier{{SlotRef{0, 0}}};
    int evaluated = 0;
    for (int depth = 1; depth <= 7; ++depth) {
        std::vector<std::vector<SlotRef>> next;
        for (const auto& steps : frontier) {
            SlotRef g = cx.glued(steps.back());
            Rat v = eval_path(f, ArcPath{{0, 0}, {g.tri, g.slot}, steps, 1, 1});
            ++evaluated;
            CHECK(v > 0);
            CHECK(is_integer(v));
            for (int s = 0; s < 3; ++s)
                if (s != g.slot) {
                    auto e = steps;
                    e.push_back({g.tri, s});
                    next.push_back(std::move(e));
                }
        }
        frontier = std::move(next);
    }
    CHECK(evaluated == 127);  // 1 + 2 + 4 + ... + 64 rooted walks
}

TEST_CASE("rescaling the fan") {
    auto f4 = unitary_frieze(ideal_to_tagged(disc_fan(4)));
    const auto& cx = f4.base.cx;

    auto g = rescale(f4, {{4, 2}});
    for (int i = 0; i < 4; ++i) CHECK(g.values[arc_joining(cx, i, 4)] == 2);
    CHECK(frieze_integral(g));
    // notched radius: unitary value 4 divided by the factor
    CHECK(eval_path(g, path_tagged_at(g.base, arc_joining(cx, 0, 4), 4, -1)) == 2);
    // a loop never sees the puncture factor
    CHECK(loop_value(g, arc_joining(cx, 0, 4), 4) == 4);
    CHECK(loop_value(f4, arc_joining(cx, 0, 4), 4) == 4);

    CHECK(rescale(f4, {}).values == f4.values);
    CHECK(rescale(f4, {{4, 1}}).values == f4.values);
    auto h = rescale(f4, {{4, 4}});
    CHECK(eval_path(h, path_tagged_at(h.base, arc_joining(cx, 0, 4), 4, -1)) == 1);

    CHECK_THROWS_AS(rescale(f4, {{4, 3}}), DomainError);
    try {
        rescale(f4, {{4, 3}});
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("does not divide") != std::string::npos);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
    CHECK_THROWS_AS(rescale(f4, {{4, Rat(1, 2)}}), DomainError);
    CHECK_THROWS_AS(rescale(f4, {{0, 2}}), DomainError);   // rim point
    CHECK_THROWS_AS(rescale(f4, {{4, 0}}), DomainError);
    CHECK_THROWS_AS(rescale(f4, {{4, -2}}), DomainError);
    CHECK_THROWS_AS(rescale(g, {{4, 2}}), DomainError);    // not unitary any more

    // all-notched chart: the factor follows the chart's own decoration,
    // so its radii scale up and the plain twin takes the inverse
    auto notched = ideal_to_tagged(disc_fan(3));
    notched.sigma[3] = -1;
    auto un = rescale(unitary_frieze(notched), {{3, 3}});
    CHECK(un.values[arc_joining(un.base.cx, 0, 3)] == 3);
    CHECK(frieze_integral(un));
    CHECK(eval_path(un, path_tagged_at(un.base, arc_joining(un.base.cx, 0, 3), 3, 1)) == 1);

    auto r = rescale_unchecked(f4, {{4, Rat(1, 2)}});
    CHECK(r.values[arc_joining(cx, 0, 4)] == Rat(1, 2));
    CHECK(!frieze_integral(r));
    CHECK(eval_path(r, path_tagged_at(r.base, arc_joining(cx, 0, 4), 4, -1)) == 8);
}

TEST_CASE("scaled states stay integral under flips, with the promised factors") {
    // plain ends at the scaled puncture keep the factor through any chart
    auto g = rescale(unitary_frieze(ideal_to_tagged(disc_fan(4))), {{4, 2}});
    unsigned seed = 99;
    for (int trial = 0; trial < 6; ++trial) {
        auto s = scramble(g, 6, seed + trial);
        CHECK(frieze_integral(s));
        for (int a = 0; a < s.base.cx.n_arcs; ++a) {
            auto d = tagged_arc_desc(s.base, a);
            int eps = epsilon_of_desc(d, 4);
            if (eps <= 0) continue;
            Rat v = tagged_value_of(s.base, s.values, a);
            CAPTURE(trial);
            CAPTURE(a);
            CHECK(num(v) % pow_int(2, eps) == 0);
        }
    }

    // in unitary charts, values notched at the puncture divide by its valence
    auto u5 = unitary_frieze(ideal_to_tagged(disc_fan(5)));
    for (int trial = 0; trial < 6; ++trial) {
        auto s = scramble(u5, 7, seed + 50 + trial);
        for (int a = 0; a < s.base.cx.n_arcs; ++a) {
            auto d = tagged_arc_desc(s.base, a);
            int notch = (d.point[0] == 5 && d.tag[0] == -1) + (d.point[1] == 5 && d.tag[1] == -1);
            if (notch == 0) continue;
            Rat v = tagged_value_of(s.base, s.values, a);
            CAPTURE(trial);
            CAPTURE(a);
            CHECK(num(v) % pow_int(5, notch) == 0);
        }
    }
}

TEST_CASE("scaling a fold base squares on the loop") {
    // hunt a chart of the four-punctured torus with a self-folded triangle
    auto t = ideal_to_tagged(four_punctured_torus());
    std::mt19937 rng(424242);
    int radius = -1, base_pt = -1;
    for (int i = 0; i < 400 && radius < 0; ++i) {
        auto arcs = interior_arcs(t);
        t = flip_tagged(t, arcs[rng() % arcs.size()], nullptr, false);
        for (int a = 0; a < t.cx.n_arcs && radius < 0; ++a) {
            if (!t.cx.arc_is_sf_radius(a)) continue;
            auto re = t.cx.arc_endpoints(a);
            int b = re[0] == t.cx.sf_puncture_of_radius(a) ? re[1] : re[0];
            if (t.sigma.at(b) == 1) {
                radius = a;
                base_pt = b;
            }
        }
    }
    REQUIRE(radius >= 0);
    int loop = t.cx.sf_loop_of_radius(radius);
    int enclosed = t.cx.sf_puncture_of_radius(radius);

    Rat k = t.cx.valence(base_pt);
    auto f = rescale(unitary_frieze(t), {{base_pt, k}});
    CHECK(f.values[radius] == k);
    CHECK(f.values[loop] == k * k);
    CHECK(tagged_value_of(f.base, f.values, loop) == k);
    for (int a = 0; a < f.base.cx.n_arcs; ++a)
        CHECK(eval_path(f, base_arc_path(f.base, a)) == tagged_value_of(f.base, f.values, a));
    CHECK(eval_path(f, path_tagged_at(f.base, radius, enclosed, 1)) *
              eval_path(f, path_tagged_at(f.base, radius, enclosed, -1)) ==
          loop_value(f, radius, enclosed));
}

TEST_CASE("one flip agrees with one development") {
    unsigned seed = 31337;
    for (const IdealComplex& cx : {polygon_disc(5), polygon_disc(6), annulus(2, 2)}) {
        for (int trial = 0; trial < 4; ++trial) {
            auto f = scramble(unitary_frieze(ideal_to_tagged(cx)), 5, ++seed);
            for (int a : interior_arcs(f.base)) {
                auto g = flip_value(f, a, true);
                auto sl = f.base.cx.slots_of_arc(a);
                ArcPath p{{sl[0].tri, sl[0].slot}, {sl[1].tri, sl[1].slot}, {sl[0]}, 1, 1};
                CAPTURE(trial);
                CAPTURE(a);
                CHECK(eval_path(f, p) == g.values[a]);
            }
        }
    }
}
