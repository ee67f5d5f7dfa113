#include "frz/classify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <tuple>

#include "frz/errors.hpp"

namespace frz {

namespace {

// (g, x, y) with a*x + b*y == g == gcd(a, b); a, b >= 0
std::tuple<Int, Int, Int> egcd(Int a, Int b) {
    Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        std::tie(r0, r1) = std::tuple(r1, Int(r0 - q * r1));
        std::tie(s0, s1) = std::tuple(s1, Int(s0 - q * s1));
        std::tie(t0, t1) = std::tuple(t1, Int(t0 - q * t1));
    }
    return {r0, s0, t0};
}

bool is_prime_int(const Int& p) {
    if (p < 2) return false;
    for (Int i = 2; i * i <= p; ++i)
        if (p % i == 0) return false;
    return true;
}

// One developed frame per base triangle along a breadth-first dual
// spanning tree; returns the tile index per triangle.
std::vector<int> develop_domain(LazyTiling& til, int root_tri) {
    const IdealComplex& cx = til.complex();
    std::vector<int> tile_of(cx.tris.size(), -1);
    tile_of[root_tri] = 0;
    std::deque<int> q{root_tri};
    while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int s = 0; s < 3; ++s) {
            SlotRef g = cx.glued({t, s});
            if (!g.valid() || tile_of[g.tri] >= 0) continue;
            tile_of[g.tri] = til.step(tile_of[t], s);
            q.push_back(g.tri);
        }
    }
    return tile_of;
}

// Direction-preserving normal form of a path; tags are irrelevant for the
// identity of the underlying curve and get cleared. A crossing path has a
// single representative already; a crossing-free one has one per slot of
// its arc, distinguished by which geometric end it starts from.
ArcPath directed_form(const IdealComplex& cx, ArcPath p) {
    p.start_tag = p.end_tag = 1;
    if (!p.steps.empty()) return p;
    int slot = 3 - p.start.corner - p.end.corner;
    int arc = cx.arc_at({p.start.tri, slot});
    auto slots = cx.slots_of_arc(arc);
    bool start_is_A =
        (p.start.tri == slots[0].tri && p.start.corner == mod3(slots[0].slot + 1)) ||
        (slots.size() > 1 && p.start.tri == slots[1].tri &&
         p.start.corner == mod3(slots[1].slot + 2));
    ArcPath best;
    bool first = true;
    for (size_t i = 0; i < slots.size(); ++i) {
        int tri = slots[i].tri, s = slots[i].slot;
        int ca = i == 0 ? mod3(s + 1) : mod3(s + 2);
        int cb = i == 0 ? mod3(s + 2) : mod3(s + 1);
        ArcPath cand = start_is_A ? ArcPath{{tri, ca}, {tri, cb}, {}, 1, 1}
                                  : ArcPath{{tri, cb}, {tri, ca}, {}, 1, 1};
        if (first || cand < best) {
            best = cand;
            first = false;
        }
    }
    return best;
}

std::string path_key(const ArcPath& p) {
    std::string s = std::to_string(p.start.tri) + "." + std::to_string(p.start.corner) + ">";
    for (const SlotRef& st : p.steps)
        s += std::to_string(st.tri) + "." + std::to_string(st.slot) + ",";
    s += ">" + std::to_string(p.end.tri) + "." + std::to_string(p.end.corner);
    return s;
}

// Angular coordinate of the ray from u toward x: the pencil of geodesics
// out of u is swept monotonically as x runs over the boundary circle, so
// exact comparisons of this value order rays around u.
Rat ray_mu(const Vec2& u, const Vec2& x) {
    Rat d = det(u, x);
    if (d == 0) throw LogicError("ray toward a parallel lift");
    Vec2 m{-u.y, u.x};
    return det(x, m) / d;
}

// Whether stepping tiles around this corner (exit through slot c+1, the
// orientation every fan walk uses) sweeps the rays toward larger mu.
int rotation_sense(const LazyTiling& til, TileCorner a) {
    const Tile& T = til.tile(a.tile);
    const Vec2& u = T.lift[a.corner];
    return ray_mu(u, T.lift[mod3(a.corner + 2)]) > ray_mu(u, T.lift[mod3(a.corner + 1)]) ? 1 : -1;
}

// A face of the value-1 structure: corner lifts in boundary-walk order
// (face on the left of each directed edge), a tiling corner per lift, and
// the three directed edges written down in base coordinates. The directed
// edge record is deck-invariant, so it names faces across fundamental
// domain copies.
struct FaceRec {
    std::array<Vec2, 3> v;
    std::array<TileCorner, 3> at;
    std::array<ArcPath, 3> walk;  // v0->v1, v1->v2, v2->v0
};

ArcPath to_path(const LazyTiling::TracedArc& tr) {
    return ArcPath{tr.start, tr.end, tr.steps, 1, 1};
}

FaceRec build_face(LazyTiling& til, std::array<Vec2, 3> v, TileCorner at0) {
    if (!same_lift(til.lift(at0), v[0])) throw LogicError("face anchor does not match its lift");
    const Vec2 u = til.lift(at0);
    int dir = ray_mu(u, v[2]) > ray_mu(u, v[1]) ? 1 : -1;
    if (dir != rotation_sense(til, at0)) std::swap(v[1], v[2]);
    FaceRec r;
    r.v = v;
    r.at[0] = at0;
    auto t01 = til.trace_arc(at0, v[1]);
    r.at[1] = t01.end_tile;
    auto t12 = til.trace_arc(r.at[1], v[2]);
    r.at[2] = t12.end_tile;
    auto t20 = til.trace_arc(r.at[2], v[0]);
    r.walk = {to_path(t01), to_path(t12), to_path(t20)};
    return r;
}

std::string face_key(const IdealComplex& cx, const FaceRec& f) {
    std::array<std::string, 3> k;
    for (int i = 0; i < 3; ++i) k[i] = path_key(directed_form(cx, f.walk[i]));
    int r = 0;
    for (int i = 1; i < 3; ++i)
        if (k[i] < k[r]) r = i;
    return k[r] + "|" + k[mod3(r + 1)] + "|" + k[mod3(r + 2)];
}

// Breadth-first walk over the faces of the value-1 structure. Crossing an
// edge (a,b) swaps the third vertex between the two mediants a+b, a-b.
std::vector<FaceRec> flood_faces(LazyTiling& til, FaceRec seed, size_t budget) {
    const IdealComplex& cx = til.complex();
    std::vector<FaceRec> out;
    std::set<std::string> seen{face_key(cx, seed)};
    std::deque<FaceRec> q;
    q.push_back(std::move(seed));
    while (!q.empty()) {
        FaceRec fc = std::move(q.front());
        q.pop_front();
        out.push_back(fc);
        if (out.size() > budget)
            throw DomainError("more value-1 faces than triangles; the input is not a frieze");
        for (int i = 0; i < 3; ++i) {
            const ArcPath& e = out.back().walk[i];
            if (e.steps.empty() &&
                cx.arc_is_boundary(cx.arc_at({e.start.tri, 3 - e.start.corner - e.end.corner})))
                continue;
            const Vec2& a = out.back().v[i];
            const Vec2& b = out.back().v[mod3(i + 1)];
            const Vec2& c = out.back().v[mod3(i + 2)];
            Vec2 w = a + b;
            if (same_lift(w, c)) w = a - b;
            else if (!same_lift(a - b, c))
                throw LogicError("flooded face is not unimodular");
            FaceRec g = build_face(til, {a, b, w}, out.back().at[i]);
            if (seen.insert(face_key(cx, g)).second) q.push_back(std::move(g));
        }
    }
    return out;
}

// Glue the flooded faces into a complex: arcs are identified by the
// undirected normal form of their paths, corners by the walk order, and
// the matching of the two directions of each interior edge yields the
// orientation-compatible gluing the validator expects.
TaggedTriangulation assemble_faces(const IdealComplex& base, const std::vector<FaceRec>& faces) {
    std::map<std::string, long long> arc_id;
    std::vector<std::array<int, 3>> corners(faces.size());
    std::vector<std::array<long long, 3>> keys(faces.size());
    for (size_t i = 0; i < faces.size(); ++i)
        for (int j = 0; j < 3; ++j) {
            corners[i][j] = start_point(base, faces[i].walk[j]);
            std::string uk = path_key(canonical_path(base, faces[i].walk[j]));
            auto it = arc_id.emplace(uk, (long long)arc_id.size()).first;
            keys[i][mod3(j + 2)] = it->second;
        }
    IdealComplex out = complex_from_triangles(corners, keys);
    validate_complex(out);
    return ideal_to_tagged(out);
}

TileCorner locate(LazyTiling& til, const Vec2& u) {
    for (int c = 0; c < 3; ++c)
        if (same_lift(til.tile(0).lift[c], u)) return {0, c};
    return til.trace({0, 0}, u);
}

}  // namespace

Int gcd_content(const Vec2& v) {
    if (!is_integer(v.x) || !is_integer(v.y))
        throw DomainError("gcd_content needs integer coordinates");
    if (is_zero(v)) throw DomainError("gcd_content of the zero vector");
    return content(v);
}

ClassificationCertificate classify(const Frieze& f) {
    validate_frieze(f, true);
    const IdealComplex& cx = f.base.cx;
    auto bmask = boundary_point_mask(cx);
    if (std::find(bmask.begin(), bmask.end(), true) == bmask.end())
        throw DomainError("unsupported: closed surface");

    // root the development at a boundary arc, endpoints at (0,1) and (1,0)
    int delta = 0;
    while (!cx.arc_is_boundary(delta)) ++delta;
    SlotRef ds = cx.slots_of_arc(delta)[0];
    int td = ds.tri, sd = ds.slot;
    std::array<Vec2, 3> root;
    root[mod3(sd + 1)] = Vec2{0, 1};
    root[mod3(sd + 2)] = Vec2{1, 0};
    root[sd] = develop_third_vertex(root[mod3(sd + 1)], root[mod3(sd + 2)],
                                    f.values[cx.arc_at(td, mod3(sd + 2))],
                                    f.values[cx.arc_at(td, mod3(sd + 1))], Side::far_side);
    LazyTiling til(cx, f.values, td, root);
    auto tile_of = develop_domain(til, td);
    std::vector<std::array<Vec2, 3>> L(cx.tris.size());
    for (size_t t = 0; t < cx.tris.size(); ++t) L[t] = til.tile(tile_of[t]).lift;

    // switch notched punctures to the plain decoration before reading gcds
    for (int P : puncture_list(cx))
        if (f.base.sigma.at(P) == -1) {
            Rat c = conjugation_factor(cx, f.values, P);
            for (size_t t = 0; t < cx.tris.size(); ++t)
                for (int j = 0; j < 3; ++j)
                    if (cx.corner_at((int)t, j) == P) L[t][j] = rescale_vertex(L[t][j], c);
        }

    // scaling constant per point: the gcd of any one of its lifts, checked
    // to agree across all of them
    ClassificationCertificate cert;
    std::vector<Int> k(cx.n_points, 0);
    for (size_t t = 0; t < cx.tris.size(); ++t)
        for (int j = 0; j < 3; ++j) {
            const Vec2& v = L[t][j];
            if (!is_integer(v.x) || !is_integer(v.y))
                throw DomainError("a lift develops non-integrally; the input is not a frieze");
            Int g = content(v);
            int p = cx.corner_at((int)t, j);
            if (k[p] == 0) {
                k[p] = g;
                if (!bmask[p]) cert.witnesses[p] = {abs(num(v.x)), abs(num(v.y))};
            } else if (k[p] != g)
                throw DomainError("lifts of one point disagree on the scaling constant");
        }
    for (int p = 0; p < cx.n_points; ++p)
        if (bmask[p] && k[p] != 1)
            throw DomainError("a boundary marked point carries a scaling constant");

    // divide the constants out; the quotient must again be a development,
    // now with integer coprime lifts and integer side values
    auto Lh = L;
    for (size_t t = 0; t < cx.tris.size(); ++t)
        for (int j = 0; j < 3; ++j)
            Lh[t][j] = L[t][j] / Rat(k[cx.corner_at((int)t, j)]);
    std::vector<Rat> wh(cx.n_arcs);
    for (int a = 0; a < cx.n_arcs; ++a) {
        auto ss = cx.slots_of_arc(a);
        Rat v0;
        for (size_t i = 0; i < ss.size(); ++i) {
            const auto& lt = Lh[ss[i].tri];
            Rat v = lambda_length(lt[mod3(ss[i].slot + 1)], lt[mod3(ss[i].slot + 2)]);
            if (i == 0) v0 = v;
            else if (v != v0) throw LogicError("divided lifts disagree across a gluing");
        }
        if (!is_integer(v0) || v0 < 1)
            throw DomainError("a divided side value is not a positive integer");
        wh[a] = v0;
    }

    // the value-1 curves of the divided structure carve out the unitary
    // triangulation; walk its faces starting from the root boundary arc
    LazyTiling tilh(cx, wh, td, Lh[td]);
    Vec2 u0 = Lh[td][mod3(sd + 1)], v0 = Lh[td][mod3(sd + 2)];
    Vec2 w0 = side_of(u0, v0, Lh[td][sd]) > 0 ? u0 + v0 : u0 - v0;
    FaceRec seed = build_face(tilh, {u0, v0, w0}, TileCorner{0, mod3(sd + 1)});
    auto faces = flood_faces(tilh, seed, cx.tris.size());
    if (faces.size() != cx.tris.size())
        throw DomainError("the value-1 curves do not close into a triangulation");
    cert.unitary = assemble_faces(cx, faces);
    if (!(derive_surface(cert.unitary.cx) == derive_surface(cx)))
        throw DomainError("the value-1 curves do not triangulate the surface");

    for (int P : puncture_list(cx)) {
        cert.constants[P] = Rat(k[P]);
        Int val = cert.unitary.cx.valence(P);
        if (val % k[P] != 0)
            throw DomainError("a scaling constant does not divide its valence");
        cert.divisibility[P] = {k[P], val};
    }

    // replay: rescaling the unitary frieze by the constants must reproduce
    // every input value, with each arc read as a curve over the new base
    Frieze fhat = unitary_frieze(cert.unitary);
    LazyTiling tilhat(cert.unitary.cx, fhat.values, 0, faces[0].v);
    for (int a = 0; a < cx.n_arcs; ++a) {
        auto d = tagged_arc_desc(f.base, a);
        int use = cx.arc_is_sf_loop(a) ? cx.sf_radius_of_loop(a) : a;
        SlotRef s0 = cx.slots_of_arc(use)[0];
        int c1 = mod3(s0.slot + 1), c2 = mod3(s0.slot + 2);
        int p1 = cx.corner_at(s0.tri, c1), p2 = cx.corner_at(s0.tri, c2);
        int tag1 = p1 == d.point[0] ? d.tag[0] : d.tag[1];
        int tag2 = p2 == d.point[1] ? d.tag[1] : d.tag[0];
        auto tr = tilhat.trace_arc(locate(tilhat, Lh[s0.tri][c1]), Lh[s0.tri][c2]);
        Rat got = eval_path(fhat, ArcPath{tr.start, tr.end, tr.steps, tag1, tag2});
        got *= tag1 == 1 ? Rat(k[p1]) : Rat(1) / Rat(k[p1]);
        got *= tag2 == 1 ? Rat(k[p2]) : Rat(1) / Rat(k[p2]);
        if (got != tagged_value_of(f.base, f.values, a))
            throw DomainError("the certificate does not reproduce the input values");
    }
    return cert;
}

Frieze strip_prime(const Frieze& f, const Int& p, int target) {
    validate_frieze(f, true);
    const IdealComplex& cx = f.base.cx;
    if (!is_prime_int(p)) throw DomainError("strip factor must be a prime");
    auto bmask = boundary_point_mask(cx);
    if (target < 0 || target >= cx.n_points || bmask[target])
        throw DomainError("strip target must be a puncture");
    bool witness = false;
    for (size_t t = 0; t < cx.tris.size() && !witness; ++t)
        for (int s = 0; s < 3 && !witness; ++s) {
            if (!cx.is_boundary_slot({(int)t, s}) || cx.corner_at((int)t, s) != target)
                continue;
            bool ok = true;
            for (int j : {mod3(s + 1), mod3(s + 2)}) {
                int a = cx.arc_at((int)t, j);
                if (cx.arc_is_sf_loop(a)) {
                    ok = false;
                    break;
                }
                auto d = tagged_arc_desc(f.base, a);
                for (int e = 0; e < 2; ++e)
                    if (d.point[e] == target && d.tag[e] != 1) ok = false;
                Rat v = tagged_value_of(f.base, f.values, a);
                if (!is_integer(v) || num(v) % p != 0) ok = false;
                if (!ok) break;
            }
            witness = ok;
        }
    if (!witness)
        throw DomainError("no boundary triangle shows both sides at the puncture divisible");
    Frieze out = rescale_unchecked(f, {{target, Rat(1) / Rat(p)}});
    validate_frieze(out, true);
    return out;
}

CoprimeLiftReport lift_coprime(const Frieze& f) {
    validate_frieze(f, true);
    const IdealComplex& cx = f.base.cx;
    for (size_t t = 0; t < cx.tris.size(); ++t) {
        std::array<Int, 3> sv;
        for (int j = 0; j < 3; ++j) sv[j] = num(f.values[cx.arc_at((int)t, j)]);
        if (gcd_int(sv[0], sv[1]) != 1 || gcd_int(sv[1], sv[2]) != 1 ||
            gcd_int(sv[0], sv[2]) != 1)
            throw DomainError("triangle sides are not pairwise coprime");
    }

    CoprimeLiftReport rep;
    rep.lifts.assign(cx.tris.size(), {});

    // seed triangle 0: sides (r, q, a) opposite corners (0, 1, 2); solve
    // x*q - y*a = r with x, y integers by extended gcd
    Int a = num(f.values[cx.arc_at(0, 2)]);
    Int q = num(f.values[cx.arc_at(0, 1)]);
    Int r = num(f.values[cx.arc_at(0, 0)]);
    auto [g, x0, y0] = egcd(q, a);
    if (g != 1) throw LogicError("coprime sides with a common factor");
    Int x = ((r * x0) % a + a) % a;
    Int y = (x * q - r) / a;
    rep.lifts[0] = {Vec2{1, 0}, Vec2{Rat(x), Rat(a)}, Vec2{Rat(y), Rat(q)}};
    for (const Vec2& v : rep.lifts[0])
        if (content(v) != 1) throw LogicError("seed lift is not primitive");

    auto fail = [&rep](int t, const Rat& z) {
        rep.success = false;
        rep.failure_site = {t, z};
    };

    // propagate apex lifts over a breadth-first dual spanning tree
    std::vector<std::array<bool, 3>> tree(cx.tris.size(), {false, false, false});
    std::vector<bool> have(cx.tris.size(), false);
    have[0] = true;
    std::deque<int> bfs{0};
    while (!bfs.empty()) {
        int t = bfs.front();
        bfs.pop_front();
        for (int s = 0; s < 3; ++s) {
            SlotRef gl = cx.glued({t, s});
            if (!gl.valid() || have[gl.tri]) continue;
            int t2 = gl.tri, s2 = gl.slot;
            auto& Ln = rep.lifts[t2];
            Ln[mod3(s2 + 1)] = rep.lifts[t][mod3(s + 2)];
            Ln[mod3(s2 + 2)] = rep.lifts[t][mod3(s + 1)];
            int sin = side_of(Ln[mod3(s2 + 1)], Ln[mod3(s2 + 2)], rep.lifts[t][s]);
            Vec2 apex = develop_third_vertex(Ln[mod3(s2 + 1)], Ln[mod3(s2 + 2)],
                                             f.values[cx.arc_at(t2, mod3(s2 + 2))],
                                             f.values[cx.arc_at(t2, mod3(s2 + 1))],
                                             sin == 1 ? Side::near_side : Side::far_side);
            if (!is_integer(apex.x) || !is_integer(apex.y)) {
                fail(t2, !is_integer(apex.x) ? apex.x : apex.y);
                return rep;
            }
            if (content(apex) != 1) {
                fail(t2, Rat(content(apex)));
                return rep;
            }
            Ln[s2] = apex;
            have[t2] = true;
            tree[t][s] = tree[t2][s2] = true;
            bfs.push_back(t2);
        }
    }

    // the gluings the tree skipped must develop integrally as well
    for (size_t t = 0; t < cx.tris.size(); ++t)
        for (int s = 0; s < 3; ++s) {
            SlotRef gl = cx.glued({(int)t, s});
            if (!gl.valid() || tree[t][s] || SlotRef{(int)t, s} > gl) continue;
            const auto& Lt = rep.lifts[t];
            Vec2 u = Lt[mod3(s + 2)], v = Lt[mod3(s + 1)];
            int sin = side_of(u, v, Lt[s]);
            Vec2 apex = develop_third_vertex(u, v, f.values[cx.arc_at(gl.tri, mod3(gl.slot + 2))],
                                             f.values[cx.arc_at(gl.tri, mod3(gl.slot + 1))],
                                             sin == 1 ? Side::near_side : Side::far_side);
            if (!is_integer(apex.x) || !is_integer(apex.y)) {
                fail(gl.tri, !is_integer(apex.x) ? apex.x : apex.y);
                return rep;
            }
            if (content(apex) != 1) {
                fail(gl.tri, Rat(content(apex)));
                return rep;
            }
        }

    rep.success = true;
    for (auto& tl : rep.lifts)
        for (auto& v : tl) v = sign_normalize(v);
    return rep;
}

TaggedTriangulation unitary_structure_of(const Frieze& f, const CoprimeLiftReport& r) {
    const IdealComplex& cx = f.base.cx;
    if (!r.success || r.lifts.size() != cx.tris.size())
        throw DomainError("the lift report does not cover the triangulation");
    LazyTiling til(cx, f.values, 0, r.lifts[0]);
    auto tile_of = develop_domain(til, 0);

    // seed the face walk at a value-1 side if one exists, otherwise at a
    // manufactured unimodular partner of the first corner
    std::optional<FaceRec> seed;
    for (int a = 0; a < cx.n_arcs && !seed; ++a) {
        if (f.values[a] != 1) continue;
        SlotRef s = cx.slots_of_arc(a)[0];
        const Tile& T = til.tile(tile_of[s.tri]);
        Vec2 u = T.lift[mod3(s.slot + 1)], v = T.lift[mod3(s.slot + 2)];
        Vec2 w = side_of(u, v, T.lift[s.slot]) > 0 ? u + v : u - v;
        seed = build_face(til, {u, v, w}, TileCorner{tile_of[s.tri], mod3(s.slot + 1)});
    }
    if (!seed) {
        Vec2 u = til.tile(0).lift[0];
        auto [g, x0, y0] = egcd(abs(num(u.x)), abs(num(u.y)));
        if (g != 1) throw LogicError("corner lift is not primitive");
        Vec2 v{Rat(num(u.y) < 0 ? y0 : -y0), Rat(num(u.x) < 0 ? -x0 : x0)};
        if (lambda_length(u, v) != 1) throw LogicError("manufactured partner is not unimodular");
        seed = build_face(til, {u, v, u + v}, TileCorner{0, 0});
    }
    auto faces = flood_faces(til, *seed, cx.tris.size());
    if (faces.size() != cx.tris.size())
        throw DomainError("the value-1 curves do not close into a triangulation");
    TaggedTriangulation out = assemble_faces(cx, faces);
    if (!(derive_surface(out.cx) == derive_surface(cx)))
        throw DomainError("the value-1 curves do not triangulate the surface");
    return out;
}

}  // namespace frz
