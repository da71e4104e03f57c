#include "cy4/localmodels.hpp"
#include "cy4/models.hpp"

#include <doctest.h>

using namespace cy4;

TEST_CASE("partitions and automorphism factors") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(7).size() == 15);
    CHECK(zfactor({2, 1, 1}) == 4);  // |Aut| = 2, product 2
    CHECK(zfactor({3}) == 3);
}

TEST_CASE("local P2 genus 0 closed form") {
    CHECK(p2_genus0_point(1) == -1);
    CHECK(p2_genus0_point(2) == Q(3, 4));
    CHECK(p2_genus0_point(3) == Q(-10, 9));
}

TEST_CASE("local P2 genus 1 closed forms agree") {
    auto R = make_ring({1}, 12);
    Series s = p2_genus1_series(R);
    CHECK(s.coeff({1}) == Q(-1, 6));
}

TEST_CASE("localization sums reproduce the P1 x P1 closed forms for d1 + d2 <= 6") {
    auto R = make_ring({1, 1}, 6);
    Series g1 = p1p1_genus1_series(R);
    for (int d1 = 0; d1 <= 6; ++d1)
        for (int d2 = 0; d1 + d2 <= 6; ++d2) {
            if (d1 + d2 == 0) continue;
            CAPTURE(d1);
            CAPTURE(d2);
            CHECK(p1p1_localization(0, d1, d2) == p1p1_genus0_point(d1, d2));
            CHECK(p1p1_localization(1, d1, d2) == g1.coeff({d1, d2}));
        }
}

TEST_CASE("the uncorrected localization integrand fails") {
    CHECK(p1p1_localization(0, 2, 1, LocalizationVariant::as_printed) != p1p1_genus0_point(2, 1));
}

TEST_CASE("c2 factors in the model files follow from the Chern class expansion") {
    CHECK(local_c2_coefficient("local_p2") == -4);
    CHECK(local_c2_coefficient("local_p1p1") == -2);
    CHECK(local_c2_coefficient("local_p3") == -10);
    for (auto name : {"local_p2", "local_p1p1", "local_p3"}) CHECK(*builtin_model(name).c2_factor == local_c2_coefficient(name));
    CHECK_THROWS_AS(local_c2_coefficient("quintic"), Error);
}
