#pragma once

#include <optional>
#include <utility>

#include "frz/frieze.hpp"

namespace frz {

// gcd of the two coordinates of an integer vector. Rejects non-integer
// input and the zero vector.
Int gcd_content(const Vec2& v);

// How an integral frieze on a bordered surface sits over the unitary one:
// the triangulation carved out by its value-1 curves (all-plain), one
// scaling constant per puncture, the coordinate pair whose gcd produced
// each constant, and the (constant, valence) divisibility table.
struct ClassificationCertificate {
    TaggedTriangulation unitary;
    ScalingProfile constants;
    std::map<int, std::array<Int, 2>> witnesses;
    std::map<int, std::array<Int, 2>> divisibility;
};

// Develop the frieze over a fundamental domain rooted at a boundary arc,
// read the scaling constant of every puncture off the lift gcds, and
// reassemble the underlying unitary triangulation from the value-1 curves.
// The certificate is verified against the input before it is returned.
// Closed surfaces are rejected with "unsupported: closed surface".
ClassificationCertificate classify(const Frieze& f);

// Divide the decoration at one puncture by a prime: every value plain
// there loses a factor p, every notched one gains it. Requires a witness
// triangle over a boundary arc whose two other sides are plain at the
// puncture with values divisible by p, and an integral result.
Frieze strip_prime(const Frieze& f, const Int& p, int target);

// Integer lifting of a frieze whose triangles have pairwise coprime side
// values: one lift triple per base triangle, every lift a coprime integer
// pair realizing the side values. On failure the first offending triangle
// and the value that broke integrality or primitivity are reported.
struct CoprimeLiftReport {
    std::vector<std::array<Vec2, 3>> lifts;
    bool success = false;
    std::optional<std::pair<int, Rat>> failure_site;
};
CoprimeLiftReport lift_coprime(const Frieze& f);

// Assemble the triangulation carved out by the value-1 curves of a
// successfully lifted frieze and validate it (face count, gluing
// structure, underlying surface). Works on the closed surfaces classify
// refuses.
TaggedTriangulation unitary_structure_of(const Frieze& f, const CoprimeLiftReport& r);

}  // namespace frz
