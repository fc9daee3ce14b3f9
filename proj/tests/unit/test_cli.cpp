#include "doctest.h"

#include <fstream>
#include <sstream>

#include "exseq_tools/cli.hpp"
#include "exseq_tools/io.hpp"

using namespace exseq;
using namespace exseq::tools;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    std::string p = std::string(EXSEQ_TEST_TMP) + "/" + name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"loci"}).code == 2);
    CHECK(run_cli({"loci", "--spec", temp_file("x2.json", R"({"kind":"cotangent","ell":2})"), "--format", "png"}).code == 2);
}

TEST_CASE("input errors name the JSON pointer") {
    auto bad = temp_file("bad.json", R"({"kind":"toric","ell":2,"v":2,"c":[0,"x"]})");
    Run r = run_cli({"loci", "--spec", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("/c/1") != std::string::npos);
    r = run_cli({"loci", "--spec", temp_file("missing_kind.json", R"({"ell":2})")});
    CHECK(r.code == 2);
    CHECK(r.err.find("/kind") != std::string::npos);
}

TEST_CASE("spec round trip") {
    for (auto s : {VarietySpec::toric(2, 2, {0, -2}), VarietySpec::cotangent(3), VarietySpec::tangent_dual(2)}) CHECK(spec_from_json(to_json(s)) == s);
    CHECK(bundles_from_json(json::parse(R"({"bundles":[[1,2],[3,-4]]})")) == std::vector<Bundle>{{1, 2}, {3, -4}});
}

TEST_CASE("loci") {
    auto spec = temp_file("x2.json", R"({"kind":"cotangent","ell":2})");
    Run r = run_cli({"loci", "--spec", spec, "--window", "3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["points"].size() == 49);
    r = run_cli({"loci", "--spec", spec, "--window", "3", "--format", "svg"});
    CHECK(r.out.rfind("<svg", 0) == 0);
    r = run_cli({"loci", "--spec", spec, "--window", "3", "--format", "ascii"});
    CHECK(r.out.find('K') != std::string::npos);
}

TEST_CASE("check and reduce") {
    auto spec = temp_file("x2.json", R"({"kind":"cotangent","ell":2})");
    auto seq = temp_file("seq.json", "[[0,0],[1,0],[2,0],[1,1],[2,1],[3,1]]");
    Run r = run_cli({"check", "--spec", spec, "--sequence", seq});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["exceptional_sequence"] == true);
    CHECK(j["maximal"] == true);
    CHECK(j["strong"] == true);
    r = run_cli({"reduce", "--sequence", seq});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).contains("steps"));
}

TEST_CASE("rouquier") {
    auto spec = temp_file("x2.json", R"({"kind":"cotangent","ell":2})");
    Run r = run_cli({"rouquier", "--spec", spec});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["dim"] == 3);
    CHECK(j["i0"] == 0);
    CHECK(j["rouquier"] == "exact");
}

TEST_CASE("verify-paper section") {
    Run r = run_cli({"verify-paper", "--section", "chow"});
    CHECK(r.code == 0);
    CHECK(run_cli({"verify-paper", "--section", "nonsense"}).code == 2);
    CHECK(run_cli({"verify-paper"}).code == 2);
}
