#include "cy4/frobenius.hpp"
#include "cy4/models.hpp"

#include <doctest.h>

using namespace cy4;

namespace {

Z fact(long n) {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace

TEST_CASE("operator factors expand to the stored theta polynomials") {
    // -6 z prod_{k=1..5} (6 theta + k)
    ThetaPoly p = poly_from_factors(1, {{6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}}, -6);
    const auto& op = builtin_model("sextic").operators[0];
    CHECK(op.terms[1].poly == p);
    ThetaPoly q = poly_mul(poly_from_factors(1, {{1, 0}}), poly_from_factors(1, {{1, 1}}));
    CHECK(q == ThetaPoly{{{2}, 1}, {{1}, 1}});
}

TEST_CASE("sextic fundamental period is sum (6k)!/(k!)^6 z^k") {
    auto& m = builtin_model("sextic");
    auto B = solve_frobenius(make_ring({1}, 5), m.operators);
    for (int k = 0; k <= 5; ++k) {
        Z d = fact(k);
        CHECK(B.X0.coeff({k}) == Q(fact(6 * k) / (d * d * d * d * d * d)));
    }
    CHECK(B.X0.coeff({2}) == 7484400);
}

TEST_CASE("local P3 single log solution") {
    auto& m = builtin_model("local_p3");
    auto B = solve_frobenius(make_ring({1}, 4), m.operators);
    CHECK(B.X0 == Series::one(B.ring));
    CHECK(B.S[0].coeff({1}) == 24);
    CHECK(B.S[0].coeff({2}) == 1260);
    CHECK(B.S[0].coeff({3}) == 123200);
}

TEST_CASE("two-parameter fundamental periods match their hypergeometric sums") {
    const int D = 6;
    SUBCASE("x10") {
        auto B = solve_frobenius(make_ring({1, 1}, D), builtin_model("x10").operators);
        for (size_t k = 0; k < B.ring->size(); ++k) {
            const Exp& e = B.ring->mono(k);
            Q v = 0;
            if (e[0] >= 2 * e[1]) {
                Z f1 = fact(e[0]), f2 = fact(e[1]);
                v = Q(fact(5 * e[0]) / (f1 * f1 * f1 * f1 * f2 * f2 * fact(e[0] - 2 * e[1])));
            }
            CHECK(B.X0[k] == v);
        }
    }
    SUBCASE("x2_5") {
        auto B = solve_frobenius(make_ring({1, 1}, D), builtin_model("x2_5").operators);
        for (size_t k = 0; k < B.ring->size(); ++k) {
            const Exp& e = B.ring->mono(k);
            Z f1 = fact(e[0]), f2 = fact(e[1]);
            CHECK(B.X0[k] == Q(fact(5 * e[0] + 2 * e[1]) / (f1 * f1 * f1 * f1 * f1 * f2 * f2)));
        }
    }
    SUBCASE("x24") {
        auto B = solve_frobenius(make_ring({1, 1}, D), builtin_model("x24").operators);
        for (size_t k = 0; k < B.ring->size(); ++k) {
            const Exp& e = B.ring->mono(k);
            Q v = 0;
            if (e[0] >= 4 * e[1]) {
                Z f2 = fact(e[1]);
                v = Q(fact(6 * e[0]) / (fact(2 * e[0]) * fact(3 * e[0]) * f2 * f2 * f2 * f2 * fact(e[0] - 4 * e[1])));
            }
            CHECK(B.X0[k] == v);
        }
    }
}

TEST_CASE("every extracted solution is annihilated by every operator") {
    for (auto name : {"local_p3", "sextic", "x10", "x2_5", "x24"}) {
        CAPTURE(name);
        auto& m = builtin_model(name);
        auto B = solve_frobenius(make_ring(m.weights, 6), m.operators);
        CHECK(annihilated(m.operators, LogSeries::from_series(B.X0)));
        for (int i = 0; i < m.r; ++i) CHECK(annihilated(m.operators, B.single_log(i)));
        for (auto& ins : m.insertions) CHECK(annihilated(m.operators, B.double_log(ins.kappa)));
        if (m.c2_kappa) CHECK(annihilated(m.operators, B.double_log(*m.c2_kappa)));
    }
}

TEST_CASE("unattainable quadratic forms are rejected") {
    auto& m = builtin_model("x10");
    auto B = solve_frobenius(make_ring({1, 1}, 5), m.operators);
    CHECK_THROWS_AS(double_log_combination(B, m.operators, {{0, 0}, {0, 1}}), Error);
    CHECK_NOTHROW(double_log_combination(B, m.operators, {{1, 0}, {0, 0}}));
}

TEST_CASE("ill-posed systems are reported") {
    PFOperator only_first{{{{0, 0}, {{{1, 0}, 1}}}, {{1, 0}, {{{0, 0}, 1}}}}};
    CHECK_THROWS_AS(solve_frobenius(make_ring({1, 1}, 3), {only_first}), Error);
}

TEST_CASE("a perturbed operator no longer annihilates the periods") {
    auto m = builtin_model("sextic");
    auto B = solve_frobenius(make_ring({1}, 5), m.operators);
    auto bad = m.operators;
    bad[0].terms[1].poly[{0}] += 1;
    CHECK_FALSE(annihilated(bad, LogSeries::from_series(B.X0)));
}
