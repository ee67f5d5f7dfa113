#pragma once

// Stock triangulated surfaces used by tests and the acceptance runner.

#include "frz/complex.hpp"
#include "frz/errors.hpp"

namespace frz {
namespace fixtures {

struct ComplexSpec {
    std::vector<std::array<int, 3>> corners;
    std::vector<std::array<long long, 3>> keys;

    IdealComplex build() const { return complex_from_triangles(corners, keys); }
};

// Cone triangle `tri` over a fresh point: replaces it by three triangles
// around new_point, using key_base..key_base+2 for the new edges.
inline void puncture_triangle(ComplexSpec& sp, int tri, int new_point, long long key_base) {
    auto [a, b, c] = sp.corners.at(tri);
    auto [x, y, z] = sp.keys.at(tri);
    sp.corners[tri] = {a, b, new_point};
    sp.keys[tri] = {key_base + 1, key_base + 0, z};
    sp.corners.push_back({b, c, new_point});
    sp.keys.push_back({key_base + 2, key_base + 1, x});
    sp.corners.push_back({c, a, new_point});
    sp.keys.push_back({key_base + 0, key_base + 2, y});
}

// Disc with n boundary points, one central puncture, triangulated by the
// n radii. Points: boundary 0..n-1 counterclockwise, puncture = n.
inline IdealComplex disc_fan(int n) {
    if (n < 2) throw DomainError("disc_fan needs at least two boundary points");
    ComplexSpec sp;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        sp.corners.push_back({i, j, n});
        sp.keys.push_back({100 + j, 100 + i, 200 + i});
    }
    return sp.build();
}

inline IdealComplex once_punctured_digon() { return disc_fan(2); }

// Unpunctured annulus, p marked points outside (ids 0..p-1), q inside
// (ids p..p+q-1), triangulated as a fan strip.
inline IdealComplex annulus(int p, int q) {
    if (p < 1 || q < 1) throw DomainError("annulus needs marked points on both boundaries");
    ComplexSpec sp;
    auto O = [&](int i) { return i % p; };
    auto I = [&](int j) { return p + j % q; };
    auto diag = [&](int j) { return 1000ll + j % (p + q); };
    int a = 0, b = 0;
    for (int step = 0; step < p + q; ++step) {
        if (step < p) {
            sp.corners.push_back({O(a), I(b), O(a + 1)});
            sp.keys.push_back({diag(step + 1), 2000 + a, diag(step)});
            ++a;
        } else {
            sp.corners.push_back({I(b), I(b + 1), O(a)});
            sp.keys.push_back({diag(step + 1), diag(step), 3000 + b});
            ++b;
        }
    }
    return sp.build();
}

// Annulus(1,1) with one triangle coned over an extra puncture.
inline IdealComplex punctured_annulus() {
    ComplexSpec sp;
    sp.corners = {{0, 1, 0}, {1, 1, 0}};
    sp.keys = {{1001, 2000, 1000}, {1000, 1001, 3000}};
    puncture_triangle(sp, 0, 2, 5000);
    return sp.build();
}

/// Square torus, one puncture, diagonal cut: 2 triangles, 3 arcs.
inline IdealComplex once_punctured_torus() {
    ComplexSpec sp;
    sp.corners = {{0, 0, 0}, {0, 0, 0}};
    sp.keys = {{2, 3, 1}, {1, 2, 3}};
    return sp.build();
}

/// Checkerboard-triangulated 2x2 grid torus: four punctures, eight
// triangles; squares with even corner sum carry the NE diagonal, the
// others the NW one. Every diagonal joins P(0,0) to P(1,1).
inline IdealComplex four_punctured_torus() {
    ComplexSpec sp;
    auto pid = [](int x, int y) { return 2 * (((y % 2) + 2) % 2) + (((x % 2) + 2) % 2); };
    auto h = [&](int i, int j) { return 100ll + 2 * (j % 2) + (i % 2); };
    auto v = [&](int i, int j) { return 200ll + 2 * (j % 2) + (i % 2); };
    auto d = [&](int i, int j) { return 300ll + 2 * (j % 2) + (i % 2); };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if ((i + j) % 2 == 0) {
                sp.corners.push_back({pid(i, j), pid(i + 1, j), pid(i + 1, j + 1)});
                sp.keys.push_back({v(i + 1, j), d(i, j), h(i, j)});
                sp.corners.push_back({pid(i, j), pid(i + 1, j + 1), pid(i, j + 1)});
                sp.keys.push_back({h(i, j + 1), v(i, j), d(i, j)});
            } else {
                sp.corners.push_back({pid(i, j), pid(i + 1, j), pid(i, j + 1)});
                sp.keys.push_back({d(i, j), v(i, j), h(i, j)});
                sp.corners.push_back({pid(i + 1, j), pid(i + 1, j + 1), pid(i, j + 1)});
                sp.keys.push_back({h(i, j + 1), d(i, j), v(i + 1, j)});
            }
        }
    return sp.build();
}

// Grid corner ids for the four punctures P1..P4 of the checkerboard
// torus: (0,0), (1,0), (1,1), (0,1).
inline constexpr std::array<int, 4> checkerboard_points{0, 1, 3, 2};

// Closed genus two surface, one puncture: octagon with side word
// a b a' b' c d c' d', fanned from vertex 0.
inline IdealComplex genus2_surface() {
    ComplexSpec sp;
    auto side_key = [](int i) -> long long {
        switch (i) {
            case 0: case 2: return 10;
            case 1: case 3: return 11;
            case 4: case 6: return 12;
            default: return 13;  // 5 and 7
        }
    };
    auto edge = [&](int u, int w) -> long long {
        // octagon vertices u < w, u == 0: either a fan diagonal or a side
        if (w == u + 1) return side_key(u);
        if (u == 0 && w == 7) return side_key(7);
        return 20 + w;  // diagonal (0, w)
    };
    for (int i = 1; i <= 6; ++i) {
        sp.corners.push_back({0, 0, 0});
        sp.keys.push_back({side_key(i), edge(0, i + 1), edge(0, i)});
    }
    return sp.build();
}

// Disc with n boundary points and no puncture, fanned from vertex 0.
inline IdealComplex polygon_disc(int n) {
    if (n < 4) throw DomainError("polygon_disc needs at least four boundary points");
    ComplexSpec sp;
    for (int i = 1; i <= n - 2; ++i) {
        sp.corners.push_back({0, i, i + 1});
        auto edge = [&](int u, int w) -> long long {
            if (u == 0 && w == n - 1) return 100 + (n - 1);
            if (w == u + 1) return 100 + u;
            return 200 + w;
        };
        sp.keys.push_back({edge(i, i + 1), edge(0, i + 1), edge(0, i)});
    }
    return sp.build();
}

}  // namespace fixtures
}  // namespace frz
