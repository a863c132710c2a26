#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "covmod/covmod.h"

namespace {

std::string read(const std::string& name)
{
    std::ifstream in(std::string(COVMOD_TEST_DATA) + "/" + name);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Profile {
    covmod_profile* p = nullptr;
    explicit Profile(const std::string& json) { REQUIRE(covmod_profile_parse(json.c_str(), &p) == COVMOD_OK); }
    ~Profile() { covmod_profile_free(p); }
};

nlohmann::json run(const Profile& prof, const char* cmd, const std::string& query, covmod_status expect)
{
    covmod_result* res = nullptr;
    REQUIRE(covmod_run(prof.p, cmd, query.c_str(), 0, &res) == expect);
    REQUIRE(res != nullptr);
    CHECK(covmod_result_status(res) == expect);
    auto out = nlohmann::json::parse(covmod_result_json(res));
    covmod_result_free(res);
    return out;
}

} // namespace

TEST_CASE("Hauzer report through the C API")
{
    Profile e(read("enriques.json"));
    const auto rep = run(e, "analyze", read("hauzer_query.json"), COVMOD_OK);
    CHECK(rep["m"] == 1);
    CHECK(rep["fstar_multiplicity"] == 2);
    CHECK(rep["pi_degree"] == 2);
    CHECK(rep["dims"]["dimY"] == 1);
    CHECK(rep["dims"]["dimX"] == 2);
    CHECK(rep["dims"]["chi_uu"] == 0);
    CHECK(rep["lagrangian_verdict"]["value"] == "yes");
    CHECK(rep["hypotheses"] == nlohmann::json::array({"exists_stable_pullback"}));

    int64_t delta = 0, chi = 0;
    const char* u = R"({"r": 2, "c": [1,0,0,0,0,0,0,0,0,0], "chi": 1})";
    REQUIRE(covmod_discriminant(e.p, u, &delta) == COVMOD_OK);
    REQUIRE(covmod_euler_pairing(e.p, u, &chi) == COVMOD_OK);
    CHECK(delta == 4);
    CHECK(chi == 0);
}

TEST_CASE("output is byte-identical across runs")
{
    Profile e(read("enriques.json"));
    std::string first;
    for (int i = 0; i < 3; ++i) {
        covmod_result* res = nullptr;
        REQUIRE(covmod_run(e.p, "analyze", read("hauzer_query.json").c_str(), 0, &res) == COVMOD_OK);
        if (i == 0)
            first = covmod_result_json(res);
        else
            CHECK(first == covmod_result_json(res));
        CHECK(std::string(covmod_result_text(res)).find("value: yes") != std::string::npos);
        covmod_result_free(res);
    }
}

TEST_CASE("status codes")
{
    Profile e(read("enriques.json"));
    covmod_result* res = nullptr;

    CHECK(covmod_run(e.p, "analyze", "{}", 0, &res) == COVMOD_INPUT_ERROR);
    CHECK(res == nullptr);
    CHECK(std::string(covmod_last_error()) == "query.u: missing");

    CHECK(covmod_run(e.p, "analyze", "{not json", 0, &res) == COVMOD_INPUT_ERROR);
    CHECK(covmod_run(e.p, "frobnicate", "{}", 0, &res) == COVMOD_INPUT_ERROR);
    CHECK(covmod_run(nullptr, "analyze", "{}", 0, &res) == COVMOD_BAD_ARGUMENT);

    const char* both =
        R"({"u": {"r": 2, "chi": 1}, "hypotheses": ["exists_stable_pullback", "stable_locus_nonempty_no_stable_pullback"]})";
    CHECK(covmod_run(e.p, "analyze", both, 0, &res) == COVMOD_REFUTED);
    CHECK(res == nullptr);
    CHECK(std::string(covmod_last_error()).find("coprime-rank-unbranched-cover") != std::string::npos);

    const auto refuted =
        run(e, "analyze", R"({"u": {"r": 3, "chi": 1}, "hypotheses": ["stable_locus_nonempty_no_stable_pullback"]})",
            COVMOD_REFUTED);
    CHECK(refuted["refuted"] == true);
    CHECK(refuted["refutations"].size() >= 1);

    covmod_profile* bad = nullptr;
    CHECK(covmod_profile_parse(R"({"kind": "enriques", "chiO": 0, "form": [[0,1],[1,0]], "n": 2, "ample_witness": [1,1]})",
                               &bad) == COVMOD_INPUT_ERROR);
    CHECK(bad == nullptr);
    CHECK(covmod_profile_parse(R"({"kind": "custom", "chiO": 0, "form": [[1,0],[0,1]], "n": 1, "ample_witness": [1,1]})",
                               &bad) == COVMOD_INPUT_ERROR);
    CHECK(std::string(covmod_last_error()).rfind("profile.form", 0) == 0);
    CHECK(covmod_profile_parse(R"({"kind": "custom", "chiO": 0, "form": [[1,0],[0,"x"]], "n": 1, "ample_witness": [1,1]})",
                               &bad) == COVMOD_INPUT_ERROR);
    CHECK(std::string(covmod_last_error()) == "profile.form[1][1]: expected an integer");
    CHECK(std::string(covmod_status_name(COVMOD_REFUTED)) == "refuted");
}

TEST_CASE("walls hilbert albanese")
{
    Profile h(read("hyperbolic.json"));
    const auto w = run(h, "walls", read("walls_query.json"), COVMOD_OK);
    REQUIRE(w["walls"].size() == 1);
    CHECK(w["walls"][0]["xi"] == nlohmann::json::array({0, 1}));
    CHECK(w["generality"]["general"] == false);

    const auto r1 = run(h, "walls", R"({"u": {"r": 1, "chi": 0}})", COVMOD_OK);
    CHECK(r1["message"] == "rank 1: the whole ample cone is the only chamber");

    covmod_result* res = nullptr;
    CHECK(covmod_run(h.p, "walls", R"({"u": {"r": 2, "chi": 1}, "H": [1, 0]})", 0, &res) == COVMOD_INPUT_ERROR);

    Profile e(read("enriques.json"));
    const auto hb = run(e, "hilbert", R"({"u": {"r": 1, "chi": 1}})", COVMOD_OK);
    CHECK(hb["P"]["text"] == "t^2 + 1");
    CHECK(hb["delta"] == 0);
    CHECK(hb["chi_uu"] == 1);
    CHECK(covmod_run(e.p, "hilbert", R"({"u": {"r": 0, "chi": 0}})", 0, &res) == COVMOD_INPUT_ERROR);

    Profile b(read("bielliptic2.json"));
    const auto al = run(b, "albanese", read("albanese_query.json"), COVMOD_OK);
    CHECK(al["agree"] == true);
    CHECK(al["b_component_zero"] == true);
    CHECK(al["image_bound"]["dimension_bound"] == 1);
    const auto empty = run(b, "albanese", "{}", COVMOD_OK);
    CHECK(empty["direct"]["c"] == nlohmann::json::array({"0", "0"}));
    CHECK(covmod_run(b.p, "albanese", R"({"n": 6, "m": 2})", 0, &res) == COVMOD_INPUT_ERROR);
}
