#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "frz/surface.hpp"

namespace frz {

struct SlotRef {
    int tri = -1;
    int slot = -1;

    bool valid() const { return tri >= 0; }
    friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

inline int mod3(int k) { return ((k % 3) + 3) % 3; }

// Glued triangle complex of an ideal triangulation. Side `slot` of a
// triangle is opposite corner `slot`, so side s joins corners s+1 and s+2.
// Gluing identifies two slots so that corner s+1 of one matches corner
// s'+2 of the other (orientation-compatible). A self-folded triangle glues
// two of its own slots; both carry the same arc id.
//
// Arcs are numbered 0..n_arcs-1; an interior arc owns two slots, a
// boundary arc one.
struct IdealComplex {
    struct Tri {
        std::array<int, 3> corner;   // marked point id per corner
        std::array<int, 3> arc;      // arc id per slot
        std::array<SlotRef, 3> glue; // partner slot, invalid for boundary
    };

    std::vector<Tri> tris;
    int n_points = 0;
    int n_arcs = 0;

    int corner_at(SlotRef s) const { return tris[s.tri].corner[s.slot]; }
    int corner_at(int tri, int slot) const { return tris[tri].corner[slot]; }
    int arc_at(SlotRef s) const { return tris[s.tri].arc[s.slot]; }
    int arc_at(int tri, int slot) const { return tris[tri].arc[slot]; }
    SlotRef glued(SlotRef s) const { return tris[s.tri].glue[s.slot]; }
    bool is_boundary_slot(SlotRef s) const { return !glued(s).valid(); }

    // both slots of an interior arc / the single slot of a boundary arc
    std::vector<SlotRef> slots_of_arc(int arc) const;
    bool arc_is_boundary(int arc) const { return slots_of_arc(arc).size() == 1; }
    // endpoints (marked point ids) of an arc, unordered
    std::array<int, 2> arc_endpoints(int arc) const;
    // self-folded radius: an interior arc whose two slots sit in one triangle
    bool arc_is_sf_radius(int arc) const;
    // loop side of the self-folded triangle owning this radius
    int sf_loop_of_radius(int arc) const;
    // enclosed puncture of a self-folded triangle given its radius
    int sf_puncture_of_radius(int arc) const;
    bool arc_is_sf_loop(int arc) const;
    int sf_radius_of_loop(int arc) const;

    int valence(int point) const;  // corner count at the point
};

// Build a complex from per-triangle corner labels and per-slot edge keys;
// slots sharing a key (exactly two, or one for boundary) get glued. Arc
// ids follow first key appearance. Corner order fixes the orientation.
IdealComplex complex_from_triangles(const std::vector<std::array<int, 3>>& corners,
                                    const std::vector<std::array<long long, 3>>& side_key);

// Structural validation: involution gluing, matching arc ids, corner
// agreement across gluings, connectivity, every point used.
void validate_complex(const IdealComplex& c);

// Which marked points lie on the boundary.
std::vector<bool> boundary_point_mask(const IdealComplex& c);

// Derive the underlying surface (validates the complex first). Boundary
// component sizes come out sorted descending.
MarkedSurface derive_surface(const IdealComplex& c);

// Canonical encoding of the labeled complex, minimized over the start
// triangle and its rotation (orientation-preserving relabelings of the
// triangle list only; marked point ids and the optional per-arc payload
// are kept as-is). Equal strings == isomorphic over the identity on
// points and payloads.
std::string canonical_encoding(const IdealComplex& c,
                               const std::vector<std::string>& arc_payload = {});

}  // namespace frz
