#pragma once

#include <map>
#include <optional>

#include "frz/complex.hpp"
#include "frz/rational.hpp"

namespace frz {

// Ideal complex plus a tag sign per puncture. A self-folded triangle in
// the complex stands for a conjugate pair at its enclosed puncture: the
// radius side is the member that is plain at the puncture, the loop side
// stands for the notched member. Punctures carrying a pair keep sign +1.
struct TaggedTriangulation {
    IdealComplex cx;
    std::map<int, int> sigma;  // puncture id -> +1 (plain) / -1 (notched)
};

std::vector<int> puncture_list(const IdealComplex& cx);
std::vector<int> pair_punctures(const IdealComplex& cx);

void validate_tagged(const TaggedTriangulation& t);

// Attach sign +1 to every puncture.
TaggedTriangulation ideal_to_tagged(const IdealComplex& cx);
inline const IdealComplex& tagged_to_ideal(const TaggedTriangulation& t) { return t.cx; }

// Endpoints and tags of the tagged arc an arc id stands for. For a
// self-folded loop this is the notched pair member (a radius curve), not
// the loop curve itself.
struct TaggedArcDesc {
    int arc = -1;
    std::array<int, 2> point{-1, -1};
    std::array<int, 2> tag{1, 1};
};
TaggedArcDesc tagged_arc_desc(const TaggedTriangulation& t, int arc);

// Sum of per-end tag contributions of the arc at the point (+1 per plain
// end, -1 per notched end).
int epsilon_of_desc(const TaggedArcDesc& d, int point);

// Values on arcs are kept in "ideal storage", indexed by arc id: ordinary
// arcs carry their tagged value, a self-folded radius carries the value
// of the plain-at-P member, the loop carries the product of the two
// member values. Stored values are lambda-lengths of the decoration fixed
// by sigma.
Rat tagged_value_of(const TaggedTriangulation& t, const std::vector<Rat>& w, int arc);

// Flip the tagged arc with this id; the replacement reuses the id. If w
// is given it is transported (Ptolemy / digonal update and the pair
// bookkeeping). With require_integral, a non-integral replacement value
// aborts with DomainError instead of producing a rational.
TaggedTriangulation flip_tagged(const TaggedTriangulation& t, int arc, std::vector<Rat>* w,
                                bool require_integral);

inline bool is_flippable(const TaggedTriangulation& t, int arc) {
    return arc >= 0 && arc < t.cx.n_arcs && !t.cx.arc_is_boundary(arc);
}

// Canonical string for dedupe/equality: complex encoding with per-arc
// payload = optional value plus the arc's tags.
std::string canonical_key(const TaggedTriangulation& t, const std::vector<Rat>* w);

// ---- arcs as crossing paths -------------------------------------------

struct CornerRef {
    int tri = -1;
    int corner = -1;
    friend auto operator<=>(const CornerRef&, const CornerRef&) = default;
};

// A curve between marked points, recorded against a base triangulation:
// the corner wedge it starts in, the ordered slots it exits through, and
// the corner it ends at. End tags matter only at punctures.
struct ArcPath {
    CornerRef start, end;
    std::vector<SlotRef> steps;
    int start_tag = 1, end_tag = 1;

    friend bool operator==(const ArcPath&, const ArcPath&) = default;
    friend auto operator<=>(const ArcPath&, const ArcPath&) = default;
};

// Local reducedness: no exit through the entry slot, ends do not spike
// into the side just crossed, tags only notch punctures.
void validate_path(const TaggedTriangulation& t, const ArcPath& p);

ArcPath reverse_path(const IdealComplex& cx, const ArcPath& p);

// Direction-normalized representative (and slot-normalized for the
// no-crossing path of a base arc).
ArcPath canonical_path(const IdealComplex& cx, const ArcPath& p);

// The tagged arc of the base as a path (no crossings; a pair member is
// the radius curve with the member's tag).
ArcPath base_arc_path(const TaggedTriangulation& t, int arc);

int start_point(const IdealComplex& cx, const ArcPath& p);
int end_point(const IdealComplex& cx, const ArcPath& p);
int path_epsilon(const IdealComplex& cx, const ArcPath& p, int point);

}  // namespace frz
