#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cy4/cy4.h"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Session {
    cy4_session* s = nullptr;
    ~Session() { cy4_session_close(s); }
};

std::string take(char* p) {
    std::string s(p);
    cy4_free(p);
    return s;
}

}  // namespace

TEST_CASE("model registry") {
    REQUIRE(cy4_model_count() == 7);
    CHECK(std::string(cy4_model_name(0)) == "local_p2");
    CHECK(cy4_model_name(99) == nullptr);
    CHECK(std::string(cy4_version()).size() > 0);
}

TEST_CASE("unknown models and unrun sessions report errors") {
    Session s;
    CHECK(cy4_session_open("no_such_model", &s.s) == CY4_ERR_UNKNOWN_MODEL);
    CHECK(s.s == nullptr);
    CHECK(std::string(cy4_last_error()).find("no_such_model") != std::string::npos);
    CHECK(cy4_session_open(nullptr, &s.s) == CY4_ERR_ARGUMENT);
    REQUIRE(cy4_session_open("local_p2", &s.s) == CY4_OK);
    char* out = nullptr;
    CHECK(cy4_session_render(s.s, "all", "json", &out) == CY4_ERR_NOT_RUN);
}

TEST_CASE("run and render JSON") {
    Session s;
    REQUIRE(cy4_session_open("local_p2", &s.s) == CY4_OK);
    REQUIRE(cy4_session_run(s.s, 10) == CY4_OK);
    char* out = nullptr;
    REQUIRE(cy4_session_render(s.s, "all", "json", &out) == CY4_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["model"] == "local_p2");
    CHECK(j["truncation"] == 10);
    CHECK(j["genus0"][0]["beta"] == nlohmann::json::array({1}));
    CHECK(j["genus0"][0]["n"] == -1);
    CHECK(j["genus0"][0]["N"] == "-1/1");
    CHECK(j["genus1"][9]["n"] == 4158);
    CHECK(j["checks"]["integrality"] == true);
    CHECK(j["checks"]["limit_infinity"].is_null());
    CHECK(j["meeting"][0].contains("convention"));
    CHECK(cy4_session_render(s.s, "all", "yaml", &out) == CY4_ERR_ARGUMENT);
}

TEST_CASE("export writes files") {
    Session s;
    REQUIRE(cy4_session_open("sextic", &s.s) == CY4_OK);
    REQUIRE(cy4_session_run(s.s, 3) == CY4_OK);
    std::string path = (std::filesystem::temp_directory_path() / "cy4_capi_meeting.csv").string();
    REQUIRE(cy4_session_export(s.s, "meeting", "csv", path.c_str()) == CY4_OK);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("kappa5,\"1\",\"1\",15245496000/1") != std::string::npos);
    std::remove(path.c_str());
    CHECK(cy4_session_export(s.s, "meeting", "csv", "/nonexistent/dir/x.csv") == CY4_ERR_IO);
}

TEST_CASE("model files can be opened by path") {
    std::string path = (std::filesystem::temp_directory_path() / "cy4_capi_toy.yaml").string();
    {
        std::ofstream o(path);
        o << "name: toy_p2\nkind: closed_p2\nr: 1\ndefault_degree: 3\ninsertions: [{label: P}]\nc2: {factor: -4}\n"
             "pairing: {gram: [[\"1/2\"]]}\n";
    }
    Session s;
    REQUIRE(cy4_session_open(path.c_str(), &s.s) == CY4_OK);
    CHECK(cy4_session_run(s.s, 0) == CY4_OK);
    char* out = nullptr;
    REQUIRE(cy4_session_render(s.s, "bps", "json", &out) == CY4_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["truncation"] == 3);
    CHECK(j["genus1"][2]["n"] == -1);
    std::remove(path.c_str());
}

TEST_CASE("check reports pass and itemized mismatches") {
    cy4_set_threads(2);
    {
        Session s;
        REQUIRE(cy4_session_open("x10", &s.s) == CY4_OK);
        char* rep = nullptr;
        int passed = 0;
        REQUIRE(cy4_session_check(s.s, &rep, &passed) == CY4_OK);
        auto j = nlohmann::json::parse(take(rep));
        CHECK(passed == 1);
        CHECK(j["mismatches"].empty());
    }
    {
        Session s;
        REQUIRE(cy4_session_open("x2_5", &s.s) == CY4_OK);
        char* rep = nullptr;
        int passed = 1;
        REQUIRE(cy4_session_check(s.s, &rep, &passed) == CY4_OK);
        auto j = nlohmann::json::parse(take(rep));
        CHECK(passed == 0);
        CHECK(j["mismatches"].size() == 2);
    }
    cy4_set_threads(0);
}
