#include "cy4/qseries.hpp"

#include <doctest.h>

#include <random>

using namespace cy4;

namespace {

Series random_series(const RingPtr& R, std::mt19937& rng, bool nilpotent) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    Series s(R);
    for (size_t k = nilpotent ? 1 : 0; k < R->size(); ++k) s[k] = frac(num(rng), den(rng));
    if (!nilpotent) s[0] = 1;
    return s;
}

}  // namespace

TEST_CASE("rationals parse and print as num/den") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7/1");
    CHECK(to_string(parse_rational("\"-1/24\"")) == "-1/24");
    CHECK(frac(12, 6) == 2);
    CHECK(frac(12, 6).get_den() == 1);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(is_integer(parse_rational("10/5")));
    CHECK_FALSE(is_integer(parse_rational("1/2")));
}

TEST_CASE("ring enumerates monomials by weighted degree") {
    auto R = make_ring({1, 1}, 2);
    REQUIRE(R->size() == 6);
    CHECK(R->mono(0) == Exp{0, 0});
    CHECK(R->degree_of(1) == 1);
    CHECK(R->index({2, 0}) >= 0);
    CHECK(R->index({2, 1}) == -1);
    auto W = make_ring({1, 2}, 4);
    CHECK(W->degree({2, 1}) == 4);
    CHECK(W->index({0, 3}) == -1);
    for (size_t k = 0; k < W->size(); ++k) CHECK(W->index(W->mono(k)) == static_cast<long>(k));
}

TEST_CASE("products truncate at the ring degree") {
    auto R = make_ring({1}, 3);
    Series x = Series::monomial(R, {1});
    Series a = Series::one(R) + x, b = Series::one(R) - x;
    Series p = a * b;
    CHECK(p.coeff({0}) == 1);
    CHECK(p.coeff({2}) == -1);
    CHECK((x * x * x * x).is_zero());
    CHECK(x.shifted({2}).coeff({3}) == 1);
    CHECK(x.shifted({3}).is_zero());
}

TEST_CASE("exp and log are inverse on random series") {
    std::mt19937 rng(7);
    for (auto w : {std::vector<int>{1}, std::vector<int>{1, 1}, std::vector<int>{1, 2}}) {
        auto R = make_ring(w, 6);
        for (int t = 0; t < 5; ++t) {
            Series s = random_series(R, rng, true);
            CHECK(log_unit(exp_nilpotent(s)) == s);
            Series u = random_series(R, rng, false);
            CHECK(exp_nilpotent(log_unit(u)) == u);
            CHECK(inverse(u) * u == Series::one(R));
            CHECK(power(u, 3) == u * u * u);
            CHECK(log_unit(u * u) == log_unit(u) * Q(2));
        }
    }
}

TEST_CASE("theta acts as the Euler operator") {
    auto R = make_ring({1, 1}, 5);
    Series m = Series::monomial(R, {2, 3}, 7);
    CHECK(m.theta(0).coeff({2, 3}) == 14);
    CHECK(m.theta(1).coeff({2, 3}) == 21);
    LogSeries L(R);
    L.add({1, 0}, m);
    LogSeries t = L.theta(0);
    CHECK(t.part({0, 0}) == m);
    CHECK(t.part({1, 0}) == m.theta(0));
    CHECK(L.theta(1).part({0, 0}).is_zero());
}

TEST_CASE("log series capacity is enforced") {
    auto R = make_ring({1}, 2);
    LogSeries L(R, 2);
    CHECK_NOTHROW(L.add({2}, Series::one(R)));
    CHECK_THROWS_AS(L.add({3}, Series::one(R)), Error);
}

TEST_CASE("mirror map inversion satisfies t(z(q)) = log q") {
    std::mt19937 rng(11);
    for (auto w : {std::vector<int>{1}, std::vector<int>{1, 1}}) {
        auto R = make_ring(w, 6);
        std::vector<Series> h;
        for (size_t i = 0; i < w.size(); ++i) h.push_back(random_series(R, rng, true));
        auto units = invert_mirror_map(h);
        for (size_t i = 0; i < w.size(); ++i) CHECK((log_unit(units[i]) + compose(h[i], units)).is_zero());
    }
}

TEST_CASE("compose with unit substitution is the identity") {
    std::mt19937 rng(3);
    auto R = make_ring({1, 1}, 5);
    Series s = random_series(R, rng, false);
    std::vector<Series> ones(2, Series::one(R));
    CHECK(compose(s, ones) == s);
}

TEST_CASE("canonical text lists terms lexicographically") {
    auto R = make_ring({1, 1}, 2);
    Series s = Series::monomial(R, {0, 1}, frac(1, 2)) + Series::monomial(R, {1, 0}, 3) + Series::one(R);
    CHECK(s.canonical() == "0,0 : 1/1\n0,1 : 1/2\n1,0 : 3/1\n");
}
