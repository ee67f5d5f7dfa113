#pragma once

#include <string>

#include <json.hpp>

#include "frz/cc.hpp"
#include "frz/classify.hpp"
#include "frz/frieze.hpp"

namespace frz {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// On-disk unit: {"schema_version", "kind", "payload"}. Kinds are listed
// in formats.md; anything else is rejected at load time. Exact numbers
// travel as decimal strings ("17", "-5/3"), structural indices as plain
// JSON integers.
struct Document {
    std::string kind;
    Json payload;
};

// Canonical bytes: two-space indent, fixed key order, trailing newline.
// save_document(load_document(text)) == text for canonical documents.
std::string save_document(const Document& d);
Document load_document(const std::string& text);  // ParseError on malformed input

std::string save_file(const Document& d, const std::string& path);
Document load_file(const std::string& path);

Json surface_to_json(const MarkedSurface& s);
MarkedSurface surface_from_json(const Json& j);

Json triangulation_to_json(const TaggedTriangulation& t);
TaggedTriangulation triangulation_from_json(const Json& j);

// Polygon triangulations share the "triangulation" kind with a payload of
// the shape {"polygon": {"vertices": m, "diagonals": [[a, b], ...]}}.
bool payload_is_polygon(const Json& j);
Json polygon_to_json(const PolygonTriangulation& t);
PolygonTriangulation polygon_from_json(const Json& j);

Json frieze_to_json(const Frieze& f);
Frieze frieze_from_json(const Json& j);

Json cc_to_json(const CCFrieze& f);
CCFrieze cc_from_json(const Json& j);

Json certificate_to_json(const ClassificationCertificate& c);
ClassificationCertificate certificate_from_json(const Json& j);

Json arc_to_json(const ArcPath& p);
ArcPath arc_from_json(const Json& j);

}  // namespace frz
