#include "frz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace frz {

namespace {

const std::set<std::string>& known_kinds() {
    static const std::set<std::string> k{"surface",     "triangulation", "frieze", "cc-frieze",
                                         "certificate", "arc",           "report"};
    return k;
}

const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
    return j.get<int>();
}

std::string as_str(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

const Json& as_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    return j;
}

// object with marked-point ids as keys
int point_key(const std::string& s) {
    try {
        return int(parse_int(s));
    } catch (const std::exception&) {
        throw ParseError("bad point id key: '" + s + "'");
    }
}

}  // namespace

std::string save_document(const Document& d) {
    if (!known_kinds().count(d.kind)) throw ParseError("unknown document kind: '" + d.kind + "'");
    Json env;
    env["schema_version"] = kSchemaVersion;
    env["kind"] = d.kind;
    env["payload"] = d.payload;
    return env.dump(2) + "\n";
}

Document load_document(const std::string& text) {
    Json env;
    try {
        env = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!env.is_object()) throw ParseError("document must be a JSON object");
    std::string ver = as_str(need(env, "schema_version"), "schema_version");
    if (ver != kSchemaVersion)
        throw ParseError("unsupported schema_version '" + ver + "' (expected '" +
                         kSchemaVersion + "')");
    Document d;
    d.kind = as_str(need(env, "kind"), "kind");
    if (!known_kinds().count(d.kind)) throw ParseError("unknown document kind: '" + d.kind + "'");
    d.payload = need(env, "payload");
    if (!d.payload.is_object()) throw ParseError("payload: expected an object");
    return d;
}

std::string save_file(const Document& d, const std::string& path) {
    std::string bytes = save_document(d);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << bytes;
    return bytes;
}

Document load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_document(buf.str());
}

// ---- surface ------------------------------------------------------------

Json surface_to_json(const MarkedSurface& s) {
    Json j;
    j["genus"] = s.genus;
    j["boundary"] = Json::array();
    for (int m : s.boundary_marked) j["boundary"].push_back(m);
    j["punctures"] = s.punctures;
    return j;
}

MarkedSurface surface_from_json(const Json& j) {
    MarkedSurface s;
    s.genus = as_int(need(j, "genus"), "genus");
    for (const auto& m : as_array(need(j, "boundary"), "boundary"))
        s.boundary_marked.push_back(as_int(m, "boundary entry"));
    s.punctures = as_int(need(j, "punctures"), "punctures");
    return s;
}

// ---- triangulation --------------------------------------------------------

Json triangulation_to_json(const TaggedTriangulation& t) {
    Json j;
    j["points"] = t.cx.n_points;
    j["arcs"] = t.cx.n_arcs;
    j["triangles"] = Json::array();
    for (const auto& tr : t.cx.tris) {
        Json e;
        e["corners"] = {tr.corner[0], tr.corner[1], tr.corner[2]};
        e["sides"] = {tr.arc[0], tr.arc[1], tr.arc[2]};
        Json g = Json::array();
        for (int s = 0; s < 3; ++s) {
            if (tr.glue[s].valid())
                g.push_back(Json::array({tr.glue[s].tri, tr.glue[s].slot}));
            else
                g.push_back(nullptr);
        }
        e["glue"] = g;
        j["triangles"].push_back(e);
    }
    Json tags = Json::object();
    for (const auto& [p, sg] : t.sigma) tags[std::to_string(p)] = sg;
    j["tags"] = tags;
    return j;
}

TaggedTriangulation triangulation_from_json(const Json& j) {
    TaggedTriangulation t;
    t.cx.n_points = as_int(need(j, "points"), "points");
    t.cx.n_arcs = as_int(need(j, "arcs"), "arcs");
    for (const auto& e : as_array(need(j, "triangles"), "triangles")) {
        IdealComplex::Tri tr;
        const Json& c = as_array(need(e, "corners"), "corners");
        const Json& a = as_array(need(e, "sides"), "sides");
        const Json& g = as_array(need(e, "glue"), "glue");
        if (c.size() != 3 || a.size() != 3 || g.size() != 3)
            throw ParseError("triangle entries must have three corners, sides and gluings");
        for (int s = 0; s < 3; ++s) {
            tr.corner[s] = as_int(c[s], "corner");
            tr.arc[s] = as_int(a[s], "side");
            if (g[s].is_null()) {
                tr.glue[s] = SlotRef{};
            } else {
                const Json& p = as_array(g[s], "glue entry");
                if (p.size() != 2) throw ParseError("glue entry must be [triangle, slot]");
                tr.glue[s] = SlotRef{as_int(p[0], "glue triangle"), as_int(p[1], "glue slot")};
            }
        }
        t.cx.tris.push_back(tr);
    }
    for (const auto& [key, val] : need(j, "tags").items()) {
        int sg = as_int(val, "tag");
        if (sg != 1 && sg != -1) throw ParseError("tags must be +1 or -1");
        t.sigma[point_key(key)] = sg;
    }
    for (const auto& tr : t.cx.tris)
        for (int s = 0; s < 3; ++s) {
            if (tr.arc[s] < 0 || tr.arc[s] >= t.cx.n_arcs)
                throw ParseError("side id out of range");
            if (tr.glue[s].valid() &&
                (tr.glue[s].tri < 0 || tr.glue[s].tri >= int(t.cx.tris.size()) ||
                 tr.glue[s].slot < 0 || tr.glue[s].slot > 2))
                throw ParseError("glue reference out of range");
        }
    validate_tagged(t);  // DomainError when the shape is fine but the gluing is not
    return t;
}

bool payload_is_polygon(const Json& j) { return j.is_object() && j.contains("polygon"); }

Json polygon_to_json(const PolygonTriangulation& t) {
    Json p;
    p["vertices"] = t.n_plus_3;
    p["diagonals"] = Json::array();
    for (auto [a, b] : t.diagonals) p["diagonals"].push_back(Json::array({a, b}));
    Json j;
    j["polygon"] = p;
    return j;
}

PolygonTriangulation polygon_from_json(const Json& j) {
    const Json& p = need(j, "polygon");
    if (!p.is_object()) throw ParseError("polygon: expected an object");
    PolygonTriangulation t;
    t.n_plus_3 = as_int(need(p, "vertices"), "vertices");
    for (const auto& d : as_array(need(p, "diagonals"), "diagonals")) {
        const Json& a = as_array(d, "diagonal");
        if (a.size() != 2) throw ParseError("diagonal: expected [a, b]");
        t.diagonals.push_back({as_int(a[0], "diagonal"), as_int(a[1], "diagonal")});
    }
    validate_polygon(t);  // DomainError when the chords do not triangulate
    return t;
}

// ---- frieze ---------------------------------------------------------------

Json frieze_to_json(const Frieze& f) {
    Json j;
    j["triangulation"] = triangulation_to_json(f.base);
    j["values"] = Json::array();
    for (const auto& v : f.values) j["values"].push_back(rat_str(v));
    return j;
}

Frieze frieze_from_json(const Json& j) {
    Frieze f;
    f.base = triangulation_from_json(need(j, "triangulation"));
    for (const auto& v : as_array(need(j, "values"), "values"))
        f.values.push_back(parse_rat(as_str(v, "value")));
    validate_frieze(f, false);
    return f;
}

// ---- cc-frieze --------------------------------------------------------------

Json cc_to_json(const CCFrieze& f) {
    Json j;
    j["width"] = f.width;
    j["rows"] = Json::array();
    for (const auto& row : f.rows) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(int_str(e));
        j["rows"].push_back(r);
    }
    return j;
}

CCFrieze cc_from_json(const Json& j) {
    CCFrieze f;
    f.width = as_int(need(j, "width"), "width");
    const Json& rows = as_array(need(j, "rows"), "rows");
    for (const auto& row : rows) {
        std::vector<Int> r;
        for (const auto& e : as_array(row, "row"))
            r.push_back(parse_int(as_str(e, "entry")));
        f.rows.push_back(std::move(r));
    }
    if (f.width < 1 || f.rows.size() != std::size_t(f.width) + 2)
        throw ParseError("rows must hold width + 2 rows");
    for (const auto& r : f.rows)
        if (r.size() != f.rows[0].size() || r.empty())
            throw ParseError("rows must share one positive period");
    return f;
}

// ---- certificate -------------------------------------------------------------

Json certificate_to_json(const ClassificationCertificate& c) {
    Json j;
    j["unitary"] = triangulation_to_json(c.unitary);
    Json k = Json::object();
    for (const auto& [p, v] : c.constants) k[std::to_string(p)] = rat_str(v);
    j["constants"] = k;
    Json w = Json::object();
    for (const auto& [p, pr] : c.witnesses)
        w[std::to_string(p)] = Json::array({int_str(pr[0]), int_str(pr[1])});
    j["witnesses"] = w;
    Json d = Json::object();
    for (const auto& [p, pr] : c.divisibility)
        d[std::to_string(p)] = Json::array({int_str(pr[0]), int_str(pr[1])});
    j["divisibility"] = d;
    return j;
}

ClassificationCertificate certificate_from_json(const Json& j) {
    ClassificationCertificate c;
    c.unitary = triangulation_from_json(need(j, "unitary"));
    for (const auto& [key, val] : need(j, "constants").items())
        c.constants[point_key(key)] = parse_rat(as_str(val, "constant"));
    auto pair_map = [](const Json& src, const char* what) {
        std::map<int, std::array<Int, 2>> out;
        for (const auto& [key, val] : src.items()) {
            const Json& a = as_array(val, what);
            if (a.size() != 2) throw ParseError(std::string(what) + ": expected two entries");
            out[point_key(key)] = {parse_int(as_str(a[0], what)), parse_int(as_str(a[1], what))};
        }
        return out;
    };
    c.witnesses = pair_map(need(j, "witnesses"), "witness");
    c.divisibility = pair_map(need(j, "divisibility"), "divisibility");
    return c;
}

// ---- arc ---------------------------------------------------------------------

Json arc_to_json(const ArcPath& p) {
    Json j;
    j["start"] = Json::array({p.start.tri, p.start.corner});
    j["end"] = Json::array({p.end.tri, p.end.corner});
    j["steps"] = Json::array();
    for (const auto& s : p.steps) j["steps"].push_back(Json::array({s.tri, s.slot}));
    j["tags"] = Json::array({p.start_tag, p.end_tag});
    return j;
}

ArcPath arc_from_json(const Json& j) {
    ArcPath p;
    auto corner = [&](const char* key) {
        const Json& a = as_array(need(j, key), key);
        if (a.size() != 2) throw ParseError(std::string(key) + ": expected [triangle, corner]");
        return CornerRef{as_int(a[0], key), as_int(a[1], key)};
    };
    p.start = corner("start");
    p.end = corner("end");
    for (const auto& s : as_array(need(j, "steps"), "steps")) {
        const Json& a = as_array(s, "step");
        if (a.size() != 2) throw ParseError("step: expected [triangle, slot]");
        p.steps.push_back(SlotRef{as_int(a[0], "step"), as_int(a[1], "step")});
    }
    const Json& tg = as_array(need(j, "tags"), "tags");
    if (tg.size() != 2) throw ParseError("tags: expected [start, end]");
    p.start_tag = as_int(tg[0], "tag");
    p.end_tag = as_int(tg[1], "tag");
    if ((p.start_tag != 1 && p.start_tag != -1) || (p.end_tag != 1 && p.end_tag != -1))
        throw ParseError("tags must be +1 or -1");
    return p;
}

}  // namespace frz
