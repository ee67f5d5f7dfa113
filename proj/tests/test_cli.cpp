#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <string>

#include "frz/io.hpp"

using namespace frz;

namespace {

struct RunResult {
    int code;
    std::string text;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FRZ_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string text;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) text.append(buf, n);
    int st = pclose(p);
    return {WEXITSTATUS(st), text};
}

std::string fx(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::string tmp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("frz_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("cc gen prints the staggered table byte-stably") {
    RunResult r = run("cc gen " + fx("heptagon.json"));
    CHECK(r.code == 0);
    CHECK(r.text ==
          "1 1 1 1 1 1 1\n"
          " 3 2 2 1 4 2 1\n"
          "  5 3 1 3 7 1 2\n"
          "   7 1 2 5 3 1 3\n"
          "    2 1 3 2 2 1 4\n"
          "     1 1 1 1 1 1 1\n");
    CHECK(run("cc gen " + fx("heptagon.json")).text == r.text);

    RunResult j = run("cc gen " + fx("heptagon.json") + " --json --out " + tmp("hepta.json"));
    CHECK(j.code == 0);
    CHECK(slurp(tmp("hepta.json")) == slurp(fx("heptagon-cc.json")));
}

TEST_CASE("cc invert recovers the polygon document") {
    RunResult r = run("cc invert " + fx("heptagon-cc.json") + " --out " + tmp("poly.json"));
    CHECK(r.code == 0);
    CHECK(slurp(tmp("poly.json")) == slurp(fx("heptagon.json")));
}

TEST_CASE("cc enum counts tables") {
    RunResult r = run("cc enum --width 4");
    CHECK(r.code == 0);
    CHECK(r.text == "width 4: 42 tables\n");
    RunResult bad = run("cc enum --width 0");
    CHECK(bad.code == 1);
}

TEST_CASE("cc embed writes the table and reports the diamond") {
    RunResult r = run("cc embed --matrix 1,1,1,2 --out " + tmp("embed.json"));
    CHECK(r.code == 0);
    CHECK(r.text == "diamond: row 1, pos 1\n");
    Document d = load_document(slurp(tmp("embed.json")));
    CHECK(d.kind == "cc-frieze");
    CHECK(cc_from_json(d.payload).width == 1);
    CHECK(run("cc embed --matrix 1,1,1,1").code == 1);   // determinant 0
    CHECK(run("cc embed --matrix 1,1,x,2").code == 2);   // malformed
}

TEST_CASE("cc check locates diamond violations") {
    CHECK(run("cc check " + fx("heptagon-cc.json")).code == 0);
    Document d = load_document(slurp(fx("heptagon-cc.json")));
    d.payload["rows"][2][3] = "9";
    std::ofstream(tmp("broken.json"), std::ios::binary) << save_document(d);
    RunResult r = run("cc check " + tmp("broken.json"));
    CHECK(r.code == 1);
    CHECK(r.text.find("diamond violation") != std::string::npos);
}

TEST_CASE("surface validate accepts and rejects with reasons") {
    RunResult ok = run("surface validate " + fx("disc4.json"));
    CHECK(ok.code == 0);
    CHECK(ok.text.find("punctures 1") != std::string::npos);
    RunResult bad = run("surface validate " + fx("sphere3.json"));
    CHECK(bad.code == 1);
    CHECK(bad.text.find("excluded surface") != std::string::npos);
}

TEST_CASE("frieze pipeline: unitary, rescale, flip, eval, classify") {
    CHECK(run("frieze unitary " + fx("disc4.json") + " --out " + tmp("u.json")).code == 0);
    CHECK(run("frieze rescale " + tmp("u.json") + " --profile 4:2 --out " + tmp("r.json")).code ==
          0);
    CHECK(run("frieze rescale " + tmp("u.json") + " --profile 4:3").code == 1);  // 3 ∤ 4
    CHECK(run("frieze rescale " + tmp("u.json") + " --profile 4:1/2").code == 1);
    CHECK(run("frieze rescale " + tmp("u.json") + " --profile 4:1/2 --unchecked").code == 0);

    RunResult ev = run("frieze eval " + tmp("r.json") + " --arc 0");
    CHECK(ev.code == 0);
    CHECK(ev.text == "2\n");

    CHECK(run("frieze flip " + tmp("r.json") + " --arc 1 --out " + tmp("f.json")).code == 0);
    Document fd = load_document(slurp(tmp("f.json")));
    CHECK(fd.kind == "frieze");

    RunResult cl = run("frieze classify " + tmp("f.json") + " --out " + tmp("c.json"));
    CHECK(cl.code == 0);
    Document cd = load_document(slurp(tmp("c.json")));
    CHECK(cd.kind == "certificate");
    CHECK(cd.payload["constants"]["4"] == "2");
}

TEST_CASE("frieze lift-coprime reports success and failure") {
    CHECK(run("frieze unitary " + fx("four-punctured-torus.json") + " --out " +
              tmp("t4u.json")).code == 0);
    RunResult ok = run("frieze lift-coprime " + tmp("t4u.json") + " --out " + tmp("lift.json"));
    CHECK(ok.code == 0);
    Document d = load_document(slurp(tmp("lift.json")));
    CHECK(d.kind == "report");
    CHECK(d.payload["success"] == true);

    RunResult bad = run("frieze lift-coprime " + fx("torus4-nonunitary-frieze.json"));
    CHECK(bad.code == 1);
    CHECK(bad.text.find("coprime") != std::string::npos);
}

TEST_CASE("render svg is deterministic and exact") {
    RunResult a = run("render svg " + fx("heptagon.json"));
    CHECK(a.code == 0);
    CHECK(a.text.substr(0, 4) == "<svg");
    RunResult b = run("render svg " + fx("heptagon-cc.json"));
    CHECK(b.text == a.text);  // table and polygon describe the same picture
    CHECK(run("render svg " + fx("heptagon.json") + " --precision 3").text != a.text);
    CHECK(run("render svg " + fx("disc4.json")).code == 2);  // not a polygon document
}

TEST_CASE("malformed input exits 2") {
    CHECK(run("cc gen " + fx("missing.json")).code == 2);
    std::ofstream(tmp("garbage.json"), std::ios::binary) << "{not json";
    CHECK(run("cc gen " + tmp("garbage.json")).code == 2);
    CHECK(run("cc gen " + fx("heptagon-cc.json")).code == 2);  // wrong kind
    CHECK(run("frieze unitary " + fx("heptagon.json")).code == 2);  // polygon, not complex
    CHECK(run("nonsense").code == 2);
    CHECK(run("frieze rescale " + fx("torus4-nonunitary-frieze.json") + " --profile x").code == 2);
}
