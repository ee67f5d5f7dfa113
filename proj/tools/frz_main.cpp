#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "frz/io.hpp"
#include "frz/svg.hpp"

using namespace frz;

namespace {

void emit(const std::string& bytes, const std::string& out) {
    if (out.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ParseError("cannot open for writing: " + out);
    f << bytes;
}

void emit_doc(const Document& d, const std::string& out) { emit(save_document(d), out); }

Document load_kind(const std::string& path, const std::string& kind) {
    Document d = load_file(path);
    if (d.kind != kind)
        throw ParseError("expected a " + kind + " document, got '" + d.kind + "'");
    return d;
}

PolygonTriangulation load_polygon(const std::string& path) {
    Document d = load_kind(path, "triangulation");
    if (!payload_is_polygon(d.payload))
        throw ParseError("expected the polygon form of a triangulation document");
    return polygon_from_json(d.payload);
}

Frieze load_frieze(const std::string& path) {
    return frieze_from_json(load_kind(path, "frieze").payload);
}

ScalingProfile parse_profile(const std::string& s) {
    ScalingProfile k;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("profile entries look like puncture:factor, got '" + item + "'");
        k[int(parse_int(item.substr(0, colon)))] = parse_rat(item.substr(colon + 1));
        pos = comma == std::string::npos ? s.size() : comma + 1;
    }
    if (k.empty()) throw ParseError("empty scaling profile");
    return k;
}

UnimodularMatrix parse_matrix(const std::string& s) {
    std::vector<Int> e;
    std::size_t pos = 0;
    while (pos <= s.size() && e.size() < 5) {
        std::size_t comma = s.find(',', pos);
        e.push_back(parse_int(s.substr(pos, comma == std::string::npos ? comma : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (e.size() != 4) throw ParseError("--matrix takes four integers a,b,c,d");
    return UnimodularMatrix{e[0], e[1], e[2], e[3]};
}

int run(int argc, char** argv) {
    CLI::App app{"exact friezes on marked surfaces"};
    app.require_subcommand(1);
    std::string in, out, profile, matrix, path_doc;
    int arc = -1, width = 0, precision = 6, start_tag = 1, end_tag = 1;
    bool as_json = false, list_tables = false, unchecked = false, rational = false;

    auto* cc = app.add_subcommand("cc", "polygon frieze tables");
    cc->require_subcommand(1);
    auto* cc_gen = cc->add_subcommand("gen", "triangulation document -> staggered table");
    cc_gen->add_option("input", in)->required();
    cc_gen->add_option("--out", out);
    cc_gen->add_flag("--json", as_json, "emit a cc-frieze document instead of text");
    auto* cc_invert = cc->add_subcommand("invert", "table -> polygon triangulation");
    cc_invert->add_option("input", in)->required();
    cc_invert->add_option("--out", out);
    auto* cc_enum = cc->add_subcommand("enum", "count (and list) all tables of a width");
    cc_enum->add_option("--width", width)->required();
    cc_enum->add_flag("--list", list_tables);
    auto* cc_embed = cc->add_subcommand("embed", "positive unimodular matrix -> table");
    cc_embed->add_option("--matrix", matrix, "a,b,c,d")->required();
    cc_embed->add_option("--out", out);
    auto* cc_check = cc->add_subcommand("check", "validate positivity, borders, diamonds");
    cc_check->add_option("input", in)->required();

    auto* surf = app.add_subcommand("surface", "marked surfaces");
    surf->require_subcommand(1);
    auto* surf_val = surf->add_subcommand("validate", "check a surface or triangulation");
    surf_val->add_option("input", in)->required();

    auto* fr = app.add_subcommand("frieze", "friezes on triangulated surfaces");
    fr->require_subcommand(1);
    auto* fr_unit = fr->add_subcommand("unitary", "all-ones frieze of a triangulation");
    fr_unit->add_option("input", in)->required();
    fr_unit->add_option("--out", out);
    auto* fr_eval = fr->add_subcommand("eval", "value of a tagged arc or crossing path");
    fr_eval->add_option("input", in)->required();
    fr_eval->add_option("--arc", arc, "arc id of the base triangulation");
    fr_eval->add_option("--start-tag", start_tag)->check(CLI::IsMember({1, -1}));
    fr_eval->add_option("--end-tag", end_tag)->check(CLI::IsMember({1, -1}));
    fr_eval->add_option("--path", path_doc, "arc document with explicit crossings");
    auto* fr_flip = fr->add_subcommand("flip", "flip an arc, transport the values");
    fr_flip->add_option("input", in)->required();
    fr_flip->add_option("--arc", arc)->required();
    fr_flip->add_flag("--rational", rational, "allow a non-integral replacement value");
    fr_flip->add_option("--out", out);
    auto* fr_resc = fr->add_subcommand("rescale", "scale the decoration at punctures");
    fr_resc->add_option("input", in)->required();
    fr_resc->add_option("--profile", profile, "puncture:factor[,puncture:factor...]")->required();
    fr_resc->add_flag("--unchecked", unchecked, "skip the divisibility/integrality gate");
    fr_resc->add_option("--out", out);
    auto* fr_cls = fr->add_subcommand("classify", "certificate over the unitary frieze");
    fr_cls->add_option("input", in)->required();
    fr_cls->add_option("--out", out);
    auto* fr_lift = fr->add_subcommand("lift-coprime", "integer lifts on coprime triangles");
    fr_lift->add_option("input", in)->required();
    fr_lift->add_option("--out", out);

    auto* rnd = app.add_subcommand("render", "figures");
    rnd->require_subcommand(1);
    auto* rnd_svg = rnd->add_subcommand("svg", "Farey triangles and Ford circles");
    rnd_svg->add_option("input", in)->required();
    rnd_svg->add_option("--out", out);
    rnd_svg->add_option("--precision", precision, "decimal digits for coordinates")
        ->check(CLI::Range(0, 40));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (cc_gen->parsed()) {
        CCFrieze f = cc_from_triangulation(load_polygon(in));
        if (as_json)
            emit_doc(Document{"cc-frieze", cc_to_json(f)}, out);
        else
            emit(render_cc(f), out);
    } else if (cc_invert->parsed()) {
        CCFrieze f = cc_from_json(load_kind(in, "cc-frieze").payload);
        emit_doc(Document{"triangulation", polygon_to_json(triangulation_from_cc(f))}, out);
    } else if (cc_enum->parsed()) {
        auto all = enumerate_cc(width);
        std::cout << "width " << width << ": " << all.size() << " tables\n";
        if (list_tables)
            for (const auto& f : all) std::cout << "\n" << render_cc(f);
    } else if (cc_embed->parsed()) {
        auto [f, loc] = embed_matrix(parse_matrix(matrix));
        emit_doc(Document{"cc-frieze", cc_to_json(f)}, out);
        std::cerr << "diamond: row " << loc.row << ", pos " << loc.pos << "\n";
    } else if (cc_check->parsed()) {
        CCFrieze f = cc_from_json(load_kind(in, "cc-frieze").payload);
        if (auto bad = validate_diamond(f)) {
            std::cerr << "diamond violation at row " << bad->first << ", position "
                      << bad->second << "\n";
            return 1;
        }
        std::cout << "ok: width " << f.width << ", period " << f.rows[0].size() << "\n";
    } else if (surf_val->parsed()) {
        Document d = load_file(in);
        MarkedSurface s;
        if (d.kind == "surface") {
            s = surface_from_json(d.payload);
            validate_surface(s);
        } else if (d.kind == "triangulation" && !payload_is_polygon(d.payload)) {
            s = derive_surface(triangulation_from_json(d.payload).cx);
        } else {
            throw ParseError("surface validate takes a surface or triangulation document");
        }
        std::cout << "ok: genus " << s.genus << ", boundary components "
                  << s.boundary_marked.size() << ", punctures " << s.punctures << "\n";
    } else if (fr_unit->parsed()) {
        Document d = load_kind(in, "triangulation");
        if (payload_is_polygon(d.payload))
            throw ParseError("frieze subcommands need the glued-complex form");
        Frieze f = unitary_frieze(triangulation_from_json(d.payload));
        emit_doc(Document{"frieze", frieze_to_json(f)}, out);
    } else if (fr_eval->parsed()) {
        Frieze f = load_frieze(in);
        if (path_doc.empty() && arc < 0)
            throw ParseError("frieze eval needs --arc or --path");
        ArcPath p;
        if (!path_doc.empty()) {
            p = arc_from_json(load_kind(path_doc, "arc").payload);
        } else {
            p = base_arc_path(f.base, arc);
            p.start_tag = start_tag;
            p.end_tag = end_tag;
        }
        std::cout << rat_str(eval_path(f, p)) << "\n";
    } else if (fr_flip->parsed()) {
        Frieze f = flip_value(load_frieze(in), arc, !rational);
        emit_doc(Document{"frieze", frieze_to_json(f)}, out);
    } else if (fr_resc->parsed()) {
        ScalingProfile k = parse_profile(profile);
        Frieze f = load_frieze(in);
        f = unchecked ? rescale_unchecked(f, k) : rescale(f, k);
        emit_doc(Document{"frieze", frieze_to_json(f)}, out);
    } else if (fr_cls->parsed()) {
        ClassificationCertificate c = classify(load_frieze(in));
        emit_doc(Document{"certificate", certificate_to_json(c)}, out);
    } else if (fr_lift->parsed()) {
        CoprimeLiftReport r = lift_coprime(load_frieze(in));
        Json payload;
        payload["success"] = r.success;
        if (r.failure_site) {
            payload["failure"] = Json::object();
            payload["failure"]["triangle"] = r.failure_site->first;
            payload["failure"]["value"] = rat_str(r.failure_site->second);
        } else {
            payload["failure"] = nullptr;
        }
        payload["lifts"] = Json::array();
        for (const auto& tri : r.lifts) {
            Json t = Json::array();
            for (const auto& v : tri)
                t.push_back(Json::array({rat_str(v.x), rat_str(v.y)}));
            payload["lifts"].push_back(t);
        }
        emit_doc(Document{"report", payload}, out);
        if (!r.success) {
            std::cerr << "lift failed at triangle " << r.failure_site->first << " (value "
                      << rat_str(r.failure_site->second) << ")\n";
            return 1;
        }
    } else if (rnd_svg->parsed()) {
        Document d = load_file(in);
        PolygonTriangulation t;
        if (d.kind == "triangulation" && payload_is_polygon(d.payload))
            t = polygon_from_json(d.payload);
        else if (d.kind == "cc-frieze")
            t = triangulation_from_cc(cc_from_json(d.payload));
        else
            throw ParseError("render svg takes a polygon triangulation or cc-frieze document");
        emit(svg_farey(t, precision), out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
