// End-to-end checks of the grr binary: exit codes, determinism, round trips.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "grr/json_io.hpp"

#ifndef GRR_BIN
#error "GRR_BIN must point at the built CLI"
#endif
#ifndef GRR_DATA_DIR
#error "GRR_DATA_DIR must point at the shipped presentations"
#endif

using namespace grr;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(GRR_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return RunResult{WEXITSTATUS(status), out};
}

std::string data(const std::string& name) {
    return std::string(GRR_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("exit code matrix") {
    CHECK(run("graded analyze " + data("z42.json")).exit_code == 0);
    CHECK(run("pb mset 4,6,10").exit_code == 0);
    CHECK(run("group span --ambient z^1").exit_code == 0);
    CHECK(run("pb analyze 2,3,3 --format text").exit_code == 0);

    // domain errors
    CHECK(run("pb mset 4,6").exit_code == 2);              // n < 3
    CHECK(run("pb mset 1,1,1").exit_code == 2);            // closed form rejects non-Gamma
    CHECK(run("pb veronese 2,3,3 5").exit_code == 2);      // 5 does not divide ebar = 2
    CHECK(run("pb realize 6,10").exit_code == 2);          // not pairwise coprime
    CHECK(run("graded analyze /nonexistent.json").exit_code == 2);
    CHECK(run("group intersect --ambient z:42 2").exit_code == 2);
    CHECK(run("group span --ambient z:x 1").exit_code == 2);

    // usage errors
    CHECK(run("").exit_code == 64);
    CHECK(run("pb").exit_code == 64);
    CHECK(run("pb bogus").exit_code == 64);
    CHECK(run("pb mset").exit_code == 64);
    CHECK(run("--format yaml pb mset 4,6,10").exit_code == 64);
}

TEST_CASE("identical invocations emit identical bytes") {
    const std::vector<std::string> cases{
        "graded analyze " + data("z42.json"), "pb mset 4,6,10",
        "pb oracle 3,10,14 --jobs 3", "group torc --ambient z^2 2,4"};
    for (const std::string& args : cases) {
        RunResult a = run(args), b = run(args);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
    // the parallel sweep must not change the bytes either
    CHECK(run("pb oracle 3,10,14 --jobs 1").out == run("pb oracle 3,10,14 --jobs 4").out);
}

TEST_CASE("emitted presentations re-parse to an equal presentation") {
    for (const char* name : {"z42.json", "uyvx.json"}) {
        RunResult r = run("graded analyze " + data(name));
        REQUIRE(r.exit_code == 0);
        Json out = Json::parse(r.out);
        PresentationFile echoed = parse_presentation_file(out["inputs"]["presentation"]);
        PresentationFile original = load_presentation_file(data(name));
        CHECK(echoed == original);
    }
}

TEST_CASE("worked example values through the CLI") {
    Json z42 = Json::parse(run("graded analyze " + data("z42.json")).out);
    CHECK(z42["results"]["gbar"]["basis"] == Json::parse(R"([["6"]])"));
    CHECK(z42["results"]["gg"]["basis"] == Json::parse(R"([["1"]])"));
    CHECK(z42["results"]["saturated_in_codim1"] == Json(false));

    Json flag = Json::parse(run("graded analyze " + data("uyvx.json")).out);
    CHECK(flag["results"]["z_grading"]["e"] == Json("1"));
    CHECK(flag["results"]["z_grading"]["ebar"] == Json("0"));
    CHECK(flag["results"]["ml_trdeg_lower_bound"] == Json(1));
    CHECK(flag["verdicts"][0]["status"] == Json("NonRigid"));

    Json mset = Json::parse(run("pb mset 4,6,10").out);
    CHECK(mset["results"]["agree"] == Json(true));
    CHECK(mset["results"]["closed_form"]["elements"] == Json::parse(R"(["6","10","15"])"));
    CHECK(mset["results"]["oracle"]["elements"] == Json::parse(R"(["6","10","15"])"));

    Json analyze = Json::parse(run("pb analyze 2,3,4,12").out);
    CHECK(analyze["results"]["invariants"]["cotype"] == Json(0));
    CHECK(analyze["results"]["invariants"]["ebar"] == Json("1"));
    CHECK(analyze["verdicts"][0]["status"] == Json("Rigid"));

    Json realize = Json::parse(run("pb realize 3,35").out);
    CHECK(realize["results"]["tuple"] == Json::parse(R"(["3","35","4","4"])"));
    CHECK(realize["results"]["verified"] == Json(true));

    Json isect = Json::parse(run("group intersect --ambient z:42 2 3").out);
    CHECK(isect["results"]["subgroup"]["basis"] == Json::parse(R"([["6"]])"));

    Json torc = Json::parse(run("group torc --ambient z^2 2,4").out);
    CHECK(torc["results"]["subgroup"]["basis"] == Json::parse(R"([["1","2"]])"));

    Json span = Json::parse(run("group span --ambient z^1").out);
    CHECK(span["results"]["subgroup"]["basis"] == Json::parse("[]"));

    Json multi = Json::parse(run("\"group\" sum --ambient z^1 6 10").out);
    CHECK(multi["results"]["subgroup"]["basis"] == Json::parse(R"([["2"]])"));

    // a rank-2 subgroup passed as one token
    Json two_gen = Json::parse(run("group span --ambient z^2 2,0 0,3").out);
    CHECK(two_gen["results"]["subgroup"]["basis"] == Json::parse(R"([["2","0"],["0","3"]])"));
    Json isect2 = Json::parse(run("group intersect --ambient z^2 \"2,0;0,3\" \"3,0;0,2\"").out);
    CHECK(isect2["results"]["subgroup"]["basis"] == Json::parse(R"([["6","0"],["0","6"]])"));

    Json rank = Json::parse(run("group rank --ambient z^2 2,4").out);
    CHECK(rank["results"]["quotient_rank"] == Json(1));
    CHECK(rank["results"]["quotient_is_torsion"] == Json(false));
}

TEST_CASE("trivial presentation: everything collapses to zero") {
    const std::string path = "/tmp/grr_trivial_presentation.json";
    {
        std::ofstream f(path);
        f << R"({"v":1,"group":{"free_rank":0,"torsion":[6]},"generators":[],"primes":[]})";
    }
    Json out = Json::parse(run("graded analyze " + path).out);
    CHECK(out["results"]["gg"]["group_structure"] ==
          Json::parse(R"({"free_rank":0,"torsion":[]})"));
    CHECK(out["results"]["gbar"]["group_structure"] ==
          Json::parse(R"({"free_rank":0,"torsion":[]})"));
    CHECK(out["results"]["ml_trdeg_lower_bound"] == Json(0));
    CHECK(out["results"]["saturated_in_codim1"] == Json(true));
    std::remove(path.c_str());
}

TEST_CASE("assume-conjecture is honored and recorded") {
    CHECK(run("pb mset 3,3,3,3,3").exit_code == 2); // HypothesisUnverified
    Json with = Json::parse(run("pb mset 3,3,3,3,3 --assume-conjecture").out);
    CHECK(with["results"]["agree"] == Json(true));
    CHECK(with["results"]["oracle"]["elements"] == Json::parse("[]"));
    REQUIRE(!with["warnings"].empty());
    CHECK(with["warnings"][0].get<std::string>().find("conjecture") != std::string::npos);
}
