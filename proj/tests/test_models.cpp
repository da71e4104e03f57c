#include "cy4/engine.hpp"

#include <doctest.h>

using namespace cy4;

TEST_CASE("all built-in models load") {
    for (auto& name : builtin_model_names()) {
        CAPTURE(name);
        CHECK(is_builtin_model(name));
        auto& m = builtin_model(name);
        CHECK(m.name == name);
        CHECK(static_cast<int>(m.weights.size()) == m.r);
        CHECK_FALSE(m.insertions.empty());
        CHECK(m.gram.size() == m.insertions.size());
        CHECK(builtin_golden(name) != nullptr);
    }
    CHECK_FALSE(is_builtin_model("quintic"));
    CHECK_THROWS_AS(builtin_model("quintic"), Error);
}

TEST_CASE("a model file round trips through the parser") {
    const char* text = R"(
name: toy
r: 1
operators:
  - - {shift: [0], theta_poly: {[2]: 1}}
    - {shift: [1], theta_poly: {[2]: -4, [1]: -4, [0]: -1}}
insertions:
  - {label: H, kappa: [["1/2"]]}
pairing: {gram: [[2]], conventions: [{name: a}, {name: b, scale: 3, use_c2: false}], genus1: b}
f1: {a: "-1/2", discriminants: [{b: "-1/12", poly: {[0]: 1, [1]: -16}}], logz: solve, c3: [7]}
)";
    auto m = parse_model(text);
    CHECK(m.name == "toy");
    CHECK(m.kind == "pf");
    CHECK(m.weights == std::vector<int>{1});
    CHECK(m.operators[0].terms[1].poly.at({1}) == -4);
    CHECK(m.insertions[0].kappa[0][0] == frac(1, 2));
    CHECK(m.convention("b").scale == 3);
    CHECK_FALSE(m.convention("b").use_c2);
    CHECK(m.genus1_convention == "b");
    CHECK(m.f1->a == frac(-1, 2));
    CHECK(m.f1->solve_logz);
    CHECK_THROWS_AS(m.convention("c"), Error);
}

TEST_CASE("malformed model files are rejected") {
    CHECK_THROWS_AS(parse_model("r: 1"), Error);
    CHECK_THROWS_AS(parse_model("name: x\nr: 1\nkind: other\ninsertions: [{label: P}]"), Error);
    CHECK_THROWS_AS(parse_model("name: x\nr: 1\ninsertions: [{label: P}]"), Error);
    CHECK_THROWS_AS(parse_model("name: x\nr: 2\nkind: closed_p1p1\ninsertions: [{label: P}]\npairing: {gram: [[1, 2]]}"), Error);
    CHECK_THROWS_AS(parse_model("name: [unclosed"), Error);
    CHECK_THROWS_AS(load_model_file("/nonexistent/model.yaml"), Error);
}

TEST_CASE("reference tables parse into cells") {
    auto g = parse_golden("model: m\ntruncation: 3\nblocks:\n  - {kind: n1, grid: [[null, 1], [2, 3]]}\n  - {kind: n0, insertion: P, values: [4, 5]}\n");
    REQUIRE(g.blocks.size() == 2);
    CHECK(g.blocks[0].cells.size() == 3);
    CHECK(g.blocks[0].cells[1].first == Exp{1, 0});
    CHECK(g.blocks[1].cells[1] == std::pair<Exp, Q>{Exp{2}, 5});
    CHECK_THROWS_AS(parse_golden("model: m\ntruncation: 3\nblocks:\n  - {kind: bogus}\n"), Error);
}

TEST_CASE("engine output carries the schema fields") {
    auto r = run_model(builtin_model("local_p2"), 4);
    std::string j = render_json(r);
    for (auto key : {"\"model\"", "\"truncation\"", "\"weights\"", "\"genus0\"", "\"genus1\"", "\"meeting\"", "\"checks\"",
                     "\"limit_infinity\": null", "\"integrality\": true", "\"round_trip\": true"})
        CHECK(j.find(key) != std::string::npos);
    CHECK(render_csv(r).rfind("kind,insertion,convention,beta,beta2,N,n\n", 0) == 0);
    CHECK(render_export(r, "bps", "csv").find("1,,\"3\",-1") != std::string::npos);
    CHECK_THROWS_AS(render_export(r, "bps", "xml"), Error);
    CHECK_THROWS_AS(render_export(r, "nothing", "csv"), Error);
}

TEST_CASE("large integers are written exactly in JSON") {
    auto r = run_model(builtin_model("sextic"), 8);
    std::string j = render_json(r);
    CHECK(j.find("\"n\": 2828627118403192025358734275898400") != std::string::npos);
    CHECK(j.find("\\u0001") == std::string::npos);
}
