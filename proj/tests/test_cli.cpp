#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bocskit/cli.hpp"
#include "helpers.hpp"

using namespace bocskit;

TEST_SUITE_BEGIN("cli");

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = runCli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string dataFile(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

std::string writeTemp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/bocskit_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("validate exits 0 on the running example and 1 on a broken differential") {
    RunResult ok = run({"validate", dataFile("run2C.bocs")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("valid") != std::string::npos);

    std::string bad = writeTemp("bad.bocs",
                                "vertices 3\nsolid a: 1 -> 2\nsolid b: 2 -> 3\nsolid c: 1 -> 3\n"
                                "dashed phi: 1 -> 2\ndashed psi: 2 -> 3\ndashed chi: 1 -> 3\n"
                                "d(a) = phi\nd(c) = psi*a\n");
    RunResult fail = run({"validate", bad});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("-psi @ phi") != std::string::npos);
}

TEST_CASE("missing files and parse errors exit 2") {
    RunResult missing = run({"validate", "/nonexistent/file.bocs"});
    CHECK(missing.code == 2);
    RunResult syntax = run({"validate", writeTemp("syntax.bocs", "vertices 3\nsolid !: x\n")});
    CHECK(syntax.code == 2);
    RunResult usage = run({"frobnicate"});
    CHECK(usage.code == 2);
}

TEST_CASE("dual output is byte-stable") {
    RunResult first = run({"dual", dataFile("run2C.bocs")});
    RunResult second = run({"dual", dataFile("run2C.bocs")});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("relation h_chi + h_psi*h_phi") != std::string::npos);
    CHECK(first.out.find("d(h_psi_a) = h_c + h_psi*h_a") != std::string::npos);
    CHECK(first.out.find("d(h_b_phi) = h_c + h_b*h_phi") != std::string::npos);
    CHECK(first.out.find("d(h_b_a) = h_b @ h_a") != std::string::npos);
}

TEST_CASE("dual --ringel emits the mirrored presentation") {
    RunResult r = run({"dual", dataFile("run2C.bocs"), "--ringel"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# ringel dual") != std::string::npos);
}

TEST_CASE("the dual output parses and regularises through the pipe") {
    RunResult dual = run({"dual", dataFile("run2C.bocs")});
    std::string path = writeTemp("dual.bocs", dual.out);
    RunResult reg = run({"regularize", path});
    CHECK(reg.code == 0);
    CHECK(reg.out.find("d(h_b_phi) = -h_psi*h_a + h_b*h_phi") != std::string::npos);
    CHECK(reg.out.find("# regularise h_psi_a with h_c") != std::string::npos);
}

TEST_CASE("box tables print the expected dimensions") {
    RunResult r = run({"box", dataFile("run2C.bocs")});
    CHECK(r.code == 0);
    CHECK(r.out.find("Box_1: deg 0: 4 deg 1: 4 deg 2: 1") != std::string::npos);
    CHECK(r.out.find("Box_2: deg 0: 2 deg 1: 1") != std::string::npos);
    CHECK(r.out.find("Box_3: deg 0: 1") != std::string::npos);
    CHECK(r.out.find("Diamond_3: deg -2: 1 deg -1: 4 deg 0: 4") != std::string::npos);
    RunResult filtered = run({"box", dataFile("run2C.bocs"), "--vertex", "2"});
    CHECK(filtered.out.find("Box_1") == std::string::npos);
    CHECK(filtered.out.find("Box_2") != std::string::npos);
}

TEST_CASE("dims reports the dimension data") {
    RunResult r = run({"dims", dataFile("run2C.bocs")});
    CHECK(r.code == 0);
    CHECK(r.out.find("dim A = 7") != std::string::npos);
    CHECK(r.out.find("dim right algebra = 21") != std::string::npos);
}

TEST_CASE("dims regularises non-regular input first, with a warning") {
    RunResult dual = run({"dual", dataFile("run2C.bocs")});
    std::string path = writeTemp("dual_for_dims.bocs", dual.out);
    RunResult r = run({"dims", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("not regular") != std::string::npos);
    CHECK(r.out.find("regular = yes") != std::string::npos);
}

TEST_CASE("validate and box emit json on request") {
    RunResult v = run({"validate", dataFile("run2C.bocs"), "--json"});
    CHECK(v.code == 0);
    nlohmann::ordered_json vj = nlohmann::ordered_json::parse(v.out);
    CHECK(vj.at("pass") == true);
    RunResult b = run({"box", dataFile("run2C.bocs"), "--json"});
    CHECK(b.code == 0);
    nlohmann::ordered_json bj = nlohmann::ordered_json::parse(b.out);
    CHECK(bj.at("complexes").size() == 3);
    CHECK(bj.at("complexes")[0].at("box").size() == 3);
    CHECK(bj.at("complexes")[0].at("box_complex").at("modules").size() == 3);
    CHECK(bj.at("complexes")[0].at("box_complex").at("differential").size() == 2);
}

TEST_CASE("check runs the comodule conditions from a json document") {
    // c_Y(v3) = psi (x) v2, c_Y(w3) = psi (x) v2 passes; the chi-twist fails
    // rows of c: vbar (x) Y pairs in basis order; see README for the layout
    // rows: (chi,v1), (phi,v1), (b*phi,v1), (psi,v2), (psi*a,v1); cols v1,v2,v3,w3
    std::string good = R"({
  "kind": "n_object",
  "dims": [1, 1, 2],
  "c": {"rows": 5, "cols": 4, "entries": [
    ["0","0","0","0"],
    ["0","0","0","0"],
    ["0","0","0","0"],
    ["0","0","1","1"],
    ["0","0","0","0"]]}
})";
    RunResult ok = run({"check", dataFile("run2C.bocs"), "--object", writeTemp("good.json", good)});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("pass") != std::string::npos);

    std::string bad = R"({
  "kind": "n_object",
  "dims": [1, 1, 2],
  "c": {"rows": 5, "cols": 4, "entries": [
    ["0","0","0","1"],
    ["0","0","0","0"],
    ["0","0","0","0"],
    ["0","0","1","0"],
    ["0","0","0","0"]]}
})";
    RunResult fail = run({"check", dataFile("run2C.bocs"), "--object", writeTemp("bad.json", bad)});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("fail") != std::string::npos);
}

TEST_CASE("check accepts r_object documents") {
    // s(psi) sends v3 and w3 to v2, everything else zero (the dualised data)
    std::string robj = R"({
  "kind": "r_object",
  "dims": [1, 1, 2],
  "s": {"psi": {"rows": 4, "cols": 4, "entries": [
    ["0","0","0","0"],
    ["0","0","1","1"],
    ["0","0","0","0"],
    ["0","0","0","0"]]}}
})";
    RunResult ok =
        run({"check", dataFile("run2C.bocs"), "--object", writeTemp("robj.json", robj)});
    CHECK(ok.code == 0);
    std::string bad = R"({
  "kind": "r_object",
  "dims": [1, 1, 2],
  "s": {"chi": {"rows": 4, "cols": 4, "entries": [
    ["0","0","0","1"],
    ["0","0","0","0"],
    ["0","0","0","0"],
    ["0","0","0","0"]]},
  "psi": {"rows": 4, "cols": 4, "entries": [
    ["0","0","0","0"],
    ["0","0","1","0"],
    ["0","0","0","0"],
    ["0","0","0","0"]]}}
})";
    RunResult fail =
        run({"check", dataFile("run2C.bocs"), "--object", writeTemp("robj_bad.json", bad)});
    CHECK(fail.code == 1);
}

TEST_CASE("check accepts n_morphism documents") {
    std::string nobj = R"({
  "kind": "n_object",
  "dims": [1, 1, 2],
  "c": {"rows": 5, "cols": 4, "entries": [
    ["0","0","0","0"],
    ["0","0","0","0"],
    ["0","0","0","0"],
    ["0","0","1","1"],
    ["0","0","0","0"]]}
})";
    // the unit morphism y -> 1 (x) y; rows are algebra-basis-major pairs
    std::string doc = std::string(R"({
  "kind": "n_morphism",
  "source": )") + nobj + R"(,
  "target": )" + nobj + R"(,
  "cf": {"rows": 8, "cols": 4, "entries": [
    ["1","0","0","0"],
    ["0","1","0","0"],
    ["0","0","1","0"],
    ["0","0","0","1"],
    ["0","0","0","0"],
    ["0","0","0","0"],
    ["0","0","0","0"],
    ["0","0","0","0"]]}
})";
    RunResult ok =
        run({"check", dataFile("run2C.bocs"), "--object", writeTemp("nmor.json", doc)});
    CHECK(ok.code == 0);
}

TEST_CASE("classify text output lists the classes") {
    RunResult r = run({"classify", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 classes") != std::string::npos);
    CHECK(r.out.find("2A") != std::string::npos);
    RunResult bad = run({"classify", "--n", "7"});
    CHECK(bad.code == 2);
}

TEST_CASE("json output round-trips") {
    RunResult r = run({"classify", "--n", "3", "--json"});
    CHECK(r.code == 0);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.at("n") == 3);
    CHECK(j.at("classes").size() == 3);
    CHECK(j.at("excluded").size() == 5);
    CHECK(j.at("classes")[0].contains("ringel_dual_label"));
    CHECK(j.dump(2) + "\n" == r.out);

    RunResult d = run({"dual", dataFile("run2C.bocs"), "--json"});
    nlohmann::ordered_json dj = nlohmann::ordered_json::parse(d.out);
    CHECK(dj.at("counts").at("degree0") == 5);
    CHECK(dj.at("counts").at("relations") == 1);
    CHECK(dj.at("counts").at("degree1") == 4);
    CHECK(dj.dump(2) + "\n" == d.out);
}

TEST_SUITE_END();
