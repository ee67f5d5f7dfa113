#include "frz/farey.hpp"

#include <algorithm>
#include <utility>

namespace frz {

bool point_less(const Vec2& a, const Vec2& b) {
    bool ainf = (a.y == 0), binf = (b.y == 0);
    if (ainf || binf) return !ainf && binf;
    return a.x * b.y < b.x * a.y;
}

FareyTriangle make_farey_triangle(Vec2 a, Vec2 b, Vec2 c) {
    FareyTriangle t{{std::move(a), std::move(b), std::move(c)}};
    std::sort(t.v.begin(), t.v.end(), point_less);
    return t;
}

Vec2 ford_normal_lift(const Vec2& v) {
    if (is_zero(v)) throw DomainError("ford_normal_lift: zero vector");
    Int dx = den(v.x), dy = den(v.y);
    Int l = dx / gcd_int(dx, dy) * dy;
    Vec2 w{v.x * Rat(l), v.y * Rat(l)};
    Int g = content(w);
    return sign_normalize(w / Rat(g));
}

namespace {

// a x + b y = gcd(a, b) for a, b >= 0
std::pair<Int, Int> bezout(Int a, Int b) {
    Int old_r = std::move(a), r = std::move(b);
    Int old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = std::move(r);
        r = std::move(t);
        t = old_x - q * x;
        old_x = std::move(x);
        x = std::move(t);
        t = old_y - q * y;
        old_y = std::move(y);
        y = std::move(t);
    }
    return {old_x, old_y};
}

Int floor_div(const Int& a, const Int& b) {  // b > 0
    Int f = a / b;
    if (a % b != 0 && a < 0) --f;
    return f;
}

}  // namespace

std::vector<FareyTriangle> farey_path(const Vec2& s_in, const Vec2& t_in) {
    Vec2 s = ford_normal_lift(s_in), t = ford_normal_lift(t_in);
    if (s == t) throw DomainError("farey_path: endpoints coincide");
    if (lambda_length(s, t) == 1) return {};

    // Send s to infinity by a unimodular map, walk down the tessellation
    // toward the image of t by mediants, then map the run back. The walk
    // is pure integer arithmetic.
    Int p = num(s.x), q = num(s.y);
    auto [x0, y0] = bezout(abs(p), q);
    Int a = p < 0 ? Int(-x0) : x0, b = y0;  // a p + b q = 1
    auto back = [&](const Vec2& w) {
        return sign_normalize(Vec2{Rat(p) * w.x - Rat(b) * w.y, Rat(q) * w.x + Rat(a) * w.y});
    };

    Vec2 tm = sign_normalize(Vec2{Rat(a) * t.x + Rat(b) * t.y, Rat(-q) * t.x + Rat(p) * t.y});
    Int X = num(tm.x), L = num(tm.y);  // target point X/L, L = lambda(s,t) >= 2

    Int n = floor_div(X, L);
    Vec2 u{Rat(n), 1}, v{Rat(n + 1), 1};
    std::vector<std::array<Vec2, 3>> run;
    run.push_back({Vec2{1, 0}, u, v});
    while (true) {
        Vec2 m = u + v;
        run.push_back({u, m, v});
        Rat cross = Rat(X) * m.y - m.x * Rat(L);
        if (cross == 0) break;  // the mediant is the target
        if (cross < 0) v = m;
        else u = m;
    }

    std::vector<FareyTriangle> out;
    out.reserve(run.size());
    for (const auto& tri : run) out.push_back(make_farey_triangle(back(tri[0]), back(tri[1]), back(tri[2])));
    return out;
}

}  // namespace frz
