#pragma once

#include <string>

#include "frz/cc.hpp"

namespace frz {

// Exact decimal rendering of a rational, truncated toward zero after
// `digits` fractional digits, trailing zeros dropped. The only place
// rationals leave exact form; no binary floating point is involved.
std::string rat_decimal(const Rat& r, int digits);

// Upper-half-plane picture of the developed polygon: every chord becomes
// a geodesic (a semicircle, or a vertical ray to the cusp at infinity)
// and every vertex carries its Ford circle (diameter 1/q^2 at p/q; the
// cusp at infinity contributes the horizontal line at height 1). All
// geometry is computed in rationals and written at `digits` precision.
std::string svg_farey(const PolygonTriangulation& t, int digits = 6);

}  // namespace frz
