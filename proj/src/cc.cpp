#include "frz/cc.hpp"

#include <algorithm>
#include <set>

#include "frz/errors.hpp"

namespace frz {

namespace {

// chords = sides plus diagonals, normalized (a, b) with a < b
std::set<std::pair<int, int>> chord_set(const PolygonTriangulation& t) {
    std::set<std::pair<int, int>> chords;
    for (int i = 0; i + 1 < t.n_plus_3; ++i) chords.insert({i, i + 1});
    chords.insert({0, t.n_plus_3 - 1});
    for (auto [a, b] : t.diagonals) chords.insert({a, b});
    return chords;
}

// Walk the region bounded by chord (a, b) and the vertex path a..b; the
// apex of the triangle resting on (a, b) splits the region in two. The
// visitor returns once per triangle, apex in the middle.
template <typename Visit>
void split_regions(const std::set<std::pair<int, int>>& chords, int a, int b,
                   const Visit& visit) {
    if (b - a < 2) return;
    int c = -1;
    for (int x = a + 1; x < b && c < 0; ++x)
        if (chords.count({a, x}) && chords.count({x, b})) c = x;
    if (c < 0) throw LogicError("maximal non-crossing set failed to triangulate");
    visit(a, c, b);
    split_regions(chords, a, c, visit);
    split_regions(chords, c, b, visit);
}

}  // namespace

void validate_polygon(const PolygonTriangulation& t) {
    int m = t.n_plus_3;
    if (m < 3) throw DomainError("a polygon needs at least three vertices");
    if ((int)t.diagonals.size() != m - 3)
        throw DomainError("a maximal triangulation needs " + std::to_string(m - 3) +
                          " diagonals, got " + std::to_string(t.diagonals.size()));
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : t.diagonals) {
        if (a < 0 || b >= m || a >= b)
            throw DomainError("diagonal endpoints out of range or unordered");
        if (b - a < 2 || (a == 0 && b == m - 1))
            throw DomainError("a polygon side is not a diagonal");
        if (!seen.insert({a, b}).second) throw DomainError("repeated diagonal");
    }
    for (auto [a, b] : t.diagonals)
        for (auto [c, d] : t.diagonals)
            if (a < c && c < b && b < d) throw DomainError("diagonals cross");
}

std::vector<std::array<int, 3>> polygon_triangles(const PolygonTriangulation& t) {
    validate_polygon(t);
    std::vector<std::array<int, 3>> out;
    split_regions(chord_set(t), 0, t.n_plus_3 - 1,
                  [&](int a, int c, int b) { out.push_back({a, c, b}); });
    return out;
}

std::vector<Vec2> polygon_development(const PolygonTriangulation& t) {
    validate_polygon(t);
    int m = t.n_plus_3;
    // every development step inserts a vertex angularly between its two
    // region ends, so the new lift is always the plain mediant
    std::vector<Vec2> v(m);
    v[0] = Vec2{0, 1};
    v[m - 1] = Vec2{1, 0};
    split_regions(chord_set(t), 0, m - 1,
                  [&](int a, int c, int b) { v[c] = v[a] + v[b]; });
    return v;
}

CCFrieze cc_from_triangulation(const PolygonTriangulation& t) {
    int m = t.n_plus_3;
    if (m < 4) throw DomainError("the table needs a polygon with at least four vertices");
    std::vector<Vec2> v = polygon_development(t);

    CCFrieze f;
    f.width = m - 3;
    f.rows.assign(m - 1, std::vector<Int>(m));
    for (int k = 0; k <= m - 2; ++k)
        for (int i = 0; i < m; ++i)
            f.rows[k][i] = num(lambda_length(v[i], v[(i + k + 1) % m]));
    return f;
}

std::vector<Int> quiddity(const PolygonTriangulation& t) {
    std::vector<Int> q(t.n_plus_3, 0);
    for (const auto& tri : polygon_triangles(t))
        for (int x : tri) ++q[x];
    return q;
}

PolygonTriangulation triangulation_from_cc(const CCFrieze& f) {
    if (auto bad = validate_diamond(f))
        throw DomainError("not a frieze table: violation at row " +
                          std::to_string(bad->first) + ", index " +
                          std::to_string(bad->second));
    int m = f.width + 3;
    std::vector<int> label(m);
    std::vector<Int> q(m);
    for (int vtx = 0; vtx < m; ++vtx) {
        label[vtx] = vtx;
        q[vtx] = f.rows[1][(vtx - 1 + m) % m];
    }
    PolygonTriangulation t{m, {}};
    while ((int)label.size() > 3) {
        int ear = -1;
        for (int i = 0; i < (int)label.size() && ear < 0; ++i)
            if (q[label[i]] == 1) ear = i;
        if (ear < 0) throw DomainError("the quiddity row has no ear");
        int s = (int)label.size();
        int p = label[(ear + s - 1) % s], x = label[(ear + 1) % s];
        t.diagonals.emplace_back(std::min(p, x), std::max(p, x));
        --q[p];
        --q[x];
        label.erase(label.begin() + ear);
    }
    std::sort(t.diagonals.begin(), t.diagonals.end());
    return t;
}

std::vector<CCFrieze> enumerate_cc(int width) {
    if (width < 1) throw DomainError("the width must be positive");
    int m = width + 3;
    using DiagSet = std::vector<std::pair<int, int>>;
    // all triangulations of the region over chord (a, b)
    auto gen = [](auto&& self, int a, int b) -> std::vector<DiagSet> {
        if (b - a < 2) return {{}};
        std::vector<DiagSet> out;
        for (int c = a + 1; c < b; ++c)
            for (const DiagSet& l : self(self, a, c))
                for (const DiagSet& r : self(self, c, b)) {
                    DiagSet d = l;
                    d.insert(d.end(), r.begin(), r.end());
                    if (c - a >= 2) d.emplace_back(a, c);
                    if (b - c >= 2) d.emplace_back(c, b);
                    out.push_back(std::move(d));
                }
        return out;
    };
    std::vector<CCFrieze> out;
    for (DiagSet& d : gen(gen, 0, m - 1)) {
        std::sort(d.begin(), d.end());
        out.push_back(cc_from_triangulation({m, std::move(d)}));
    }
    return out;
}

std::optional<std::pair<int, int>> validate_diamond(const CCFrieze& f) {
    int n = f.width, m = n + 3;
    if (n < 1 || (int)f.rows.size() != n + 2)
        throw DomainError("malformed table: wrong row count for the width");
    for (const auto& row : f.rows)
        if ((int)row.size() != m)
            throw DomainError("malformed table: wrong period length");
    for (int k = 0; k <= n + 1; ++k)
        for (int i = 0; i < m; ++i) {
            if (f.rows[k][i] < 1) return {{k, i}};
            if ((k == 0 || k == n + 1) && f.rows[k][i] != 1) return {{k, i}};
        }
    for (int k = 1; k <= n; ++k)
        for (int i = 0; i < m; ++i)
            if (cc_entry(f, k, i) * cc_entry(f, k, i + 1) -
                    cc_entry(f, k - 1, i + 1) * cc_entry(f, k + 1, i) !=
                1)
                return {{k, i}};
    return std::nullopt;
}

CCFrieze cc_canonical(const CCFrieze& f) {
    int m = f.width + 3;
    CCFrieze best = f;
    for (int r = 1; r < m; ++r) {
        CCFrieze cand = f;
        for (int k = 0; k < (int)f.rows.size(); ++k)
            for (int i = 0; i < m; ++i) cand.rows[k][i] = f.rows[k][(i + r) % m];
        if (cand.rows < best.rows) best = std::move(cand);
    }
    return best;
}

std::pair<CCFrieze, DiamondLoc> embed_matrix(const UnimodularMatrix& u) {
    if (u.a < 1 || u.b < 1 || u.c < 1 || u.d < 1)
        throw DomainError("matrix entries must be positive");
    if (u.a * u.d - u.b * u.c != 1) throw DomainError("the determinant must be one");

    Vec2 A{0, 1}, B{1, 0}, C{Rat(u.a), Rat(u.b)}, D{Rat(u.c), Rat(u.d)};
    std::vector<Vec2> w = {A, B, C, D};
    for (const auto& [s, t] : {std::pair{A, D}, {B, C}})
        for (const FareyTriangle& tri : farey_path(s, t))
            w.insert(w.end(), tri.v.begin(), tri.v.end());
    std::sort(w.begin(), w.end(), point_less);
    w.erase(std::unique(w.begin(), w.end()), w.end());

    int m = (int)w.size();
    PolygonTriangulation t{m, {}};
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m - (i == 0); ++j)
            if (lambda_length(w[i], w[j]) == 1) t.diagonals.emplace_back(i, j);
    validate_polygon(t);
    for (int i = 0; i < m; ++i)
        if (lambda_length(w[i], w[(i + 1) % m]) != 1)
            throw LogicError("the spanned polygon has a long side");

    CCFrieze f;
    f.width = m - 3;
    f.rows.assign(m - 1, std::vector<Int>(m));
    for (int k = 0; k <= m - 2; ++k)
        for (int i = 0; i < m; ++i)
            f.rows[k][i] = num(lambda_length(w[i], w[(i + k + 1) % m]));

    int idxC = (int)(std::find(w.begin(), w.end(), C) - w.begin());
    int idxD = (int)(std::find(w.begin(), w.end(), D) - w.begin());
    // the quadrilateral (c/d, a/b) x (1/0, 0/1) has consecutive vertices on
    // both short sides, so its four chords form one diamond anchored at c/d
    if (idxC != idxD + 1 || !(w.front() == A) || !(w.back() == B))
        throw LogicError("the matrix corner pair is not a polygon side");
    DiamondLoc loc{m - idxD - 2, idxD};
    if (cc_entry(f, loc.row, loc.pos) != u.d || cc_entry(f, loc.row, loc.pos + 1) != u.a ||
        cc_entry(f, loc.row - 1, loc.pos + 1) != u.b ||
        cc_entry(f, loc.row + 1, loc.pos) != u.c)
        throw LogicError("the diamond landed off target");
    return {std::move(f), loc};
}

std::string render_cc(const CCFrieze& f) {
    size_t wmax = 1;
    for (const auto& row : f.rows)
        for (const Int& e : row) wmax = std::max(wmax, int_str(e).size());
    size_t cell = wmax + 1 + ((wmax + 1) % 2);  // even, so half-steps stay aligned
    std::string out;
    for (size_t k = 0; k < f.rows.size(); ++k) {
        std::string line(k * (cell / 2), ' ');
        for (const Int& e : f.rows[k]) {
            std::string s = int_str(e);
            line += std::string(wmax - s.size(), ' ') + s + std::string(cell - wmax, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace frz
