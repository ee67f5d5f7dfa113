#pragma once

#include <map>

#include "frz/develop.hpp"
#include "frz/tagged.hpp"

namespace frz {

// Value assignment on the arcs of a base triangulation, in ideal storage
// (see tagged.hpp): one positive rational per arc id, boundary arcs at 1.
// Integrality is a property, not a type: check with frieze_integral.
struct Frieze {
    TaggedTriangulation base;
    std::vector<Rat> values;
};

Frieze unitary_frieze(const TaggedTriangulation& t);

// shape, positivity, boundary-1; with require_integral also integrality
void validate_frieze(const Frieze& f, bool require_integral);
bool frieze_integral(const Frieze& f);

// Sum over the corners at the puncture of w_opposite/(w_side * w_side):
// switching an arc end at the puncture to the other tag multiplies its
// value by this factor.
Rat conjugation_factor(const IdealComplex& cx, const std::vector<Rat>& w, int puncture);

// Lambda length of the curve: develop the crossed strip, take the length
// of the endpoint lifts, conjugate every end whose tag disagrees with the
// base sign at that puncture.
Rat eval_path(const Frieze& f, const ArcPath& gamma);

// Flip an arc and transport the values (wraps flip_tagged).
Frieze flip_value(const Frieze& f, int arc, bool require_integral = true);

// Value of the loop based at the far end of the arc going once around the
// puncture, following the arc. The arc must join two distinct points.
Rat loop_value(const Frieze& f, int arc, int puncture);

// puncture id -> positive factor; punctures absent from the map keep 1
using ScalingProfile = std::map<int, Rat>;

// Scale the decoration the chart references at each puncture: every end
// whose tag matches the chart's sign there picks up the factor, every
// disagreeing end the inverse; a self-folded loop scales by the square of
// its base-point factor. The gated form requires a unitary input, integer
// factors dividing the valence, and an integral result; the unchecked
// form applies the formula to any frieze.
Frieze rescale(const Frieze& f, const ScalingProfile& k);
Frieze rescale_unchecked(const Frieze& f, const ScalingProfile& k);

}  // namespace frz
