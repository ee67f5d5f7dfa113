#pragma once

#include <numeric>
#include <vector>

#include "frz/errors.hpp"

namespace frz {

// Oriented surface with marked points: genus, marked points per boundary
// component, punctures (interior marked points).
struct MarkedSurface {
    int genus = 0;
    std::vector<int> boundary_marked;
    int punctures = 0;

    friend bool operator==(const MarkedSurface&, const MarkedSurface&) = default;
};

inline int total_boundary_marked(const MarkedSurface& s) {
    return std::accumulate(s.boundary_marked.begin(), s.boundary_marked.end(), 0);
}

// Number of arcs in any triangulation of s.
inline int arc_count(const MarkedSurface& s) {
    return 6 * s.genus + 3 * int(s.boundary_marked.size()) + 3 * s.punctures +
           total_boundary_marked(s) - 6;
}

// Throws DomainError naming the violated rule. Accepted surfaces are the
// ones that admit a triangulation and are not degenerate small cases.
inline void validate_surface(const MarkedSurface& s) {
    if (s.genus < 0) throw DomainError("surface: negative genus");
    if (s.punctures < 0) throw DomainError("surface: negative puncture count");
    for (int m : s.boundary_marked)
        if (m < 1) throw DomainError("surface: boundary component without marked points");
    bool closed = s.boundary_marked.empty();
    if (closed && s.genus == 0 && s.punctures <= 3)
        throw DomainError("excluded surface: sphere with at most 3 punctures");
    if (s.genus == 0 && s.boundary_marked.size() == 1 && s.punctures == 0 &&
        s.boundary_marked[0] <= 3)
        throw DomainError("excluded surface: unpunctured disc with at most 3 marked points");
    if (s.genus == 0 && s.boundary_marked.size() == 1 && s.boundary_marked[0] == 1 &&
        s.punctures == 1)
        throw DomainError("excluded surface: once-punctured monogon");
    if (closed && s.punctures == 0) throw DomainError("surface: closed surface needs a puncture");
    if (arc_count(s) < 1) throw DomainError("surface: no triangulation (arc count < 1)");
}

}  // namespace frz
