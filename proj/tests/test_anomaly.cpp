#include "cy4/anomaly.hpp"
#include "cy4/models.hpp"

#include <doctest.h>

using namespace cy4;

namespace {

F1Result f1_for(const ModelSpec& m, const F1Spec& spec, int D) {
    auto B = solve_frobenius(make_ring(m.weights, D), m.operators);
    return f1_series(B, mirror_map(B), spec);
}

}  // namespace

TEST_CASE("limit targets") {
    CHECK(limit_targets({-420}) == std::vector<Q>{Q(35, 2)});
    CHECK(limit_targets({5}) == std::vector<Q>{Q(-5, 24)});
}

TEST_CASE("sextic large volume limit") {
    auto& m = builtin_model("sextic");
    auto r = f1_for(m, *m.f1, 3);
    CHECK(r.linear == std::vector<Q>{Q(35, 2)});
    REQUIRE(r.limit_ok);
    CHECK(*r.limit_ok);
}

TEST_CASE("solved log z coefficients for the bidegree (2,5) model") {
    auto& m = builtin_model("x2_5");
    REQUIRE(m.f1->solve_logz);
    auto r = f1_for(m, *m.f1, 3);
    CHECK(r.logz == std::vector<Q>{Q(51, 4), Q(22, 3)});
    CHECK(*r.limit_ok);
}

TEST_CASE("changing the X0 exponent breaks the limit when c_i are fixed") {
    auto& m = builtin_model("x24");
    F1Spec s = *m.f1;
    s.a = 928;
    s.logz = m.f1_variants.at(0).logz;
    auto r = f1_for(m, s, 3);
    CHECK_FALSE(*r.limit_ok);
    auto good = f1_for(m, *m.f1, 3);
    CHECK(*good.limit_ok);
}

TEST_CASE("discriminants must be normalized") {
    auto& m = builtin_model("sextic");
    F1Spec s = *m.f1;
    s.discriminants[0].poly[{0}] = 2;
    CHECK_THROWS_AS(f1_for(m, s, 2), Error);
}
