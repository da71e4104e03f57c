#include "cy4/psi.hpp"

#include <doctest.h>

#include <functional>

using namespace cy4;

namespace {

// all exponent vectors of length n with entries summing to total
void vectors(int n, int total, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(total);
        f(cur);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= total; ++k) {
        cur.push_back(k);
        vectors(n, total - k, cur, f);
        cur.pop_back();
    }
}

Z multinomial(const std::vector<int>& a) {
    Z r = 1;
    long s = 0;
    for (int x : a) {
        s += x;
        Z b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(x));
        r *= b;
    }
    return r;
}

Q pw(const Q& x, int k) {
    Q r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

TEST_CASE("genus 0 DVV agrees with the closed form and the multinomial identity for n <= 8") {
    for (int n = 3; n <= 8; ++n) {
        std::vector<int> cur;
        vectors(n, n - 3, cur, [&](const std::vector<int>& a) {
            CHECK(psi_dvv(0, a) == psi_genus0(a));
            CHECK(psi_genus0(a) == Q(multinomial(a)));
        });
    }
}

TEST_CASE("string and dilaton equations for n <= 8") {
    for (int g = 0; g <= 1; ++g)
        for (int n = (g == 0 ? 3 : 1); n <= 7; ++n) {
            std::vector<int> cur;
            vectors(n, 3 * g - 3 + n + 1, cur, [&](const std::vector<int>& a) {
                // string: <tau_0 prod tau_ai> = sum_j <... tau_{aj - 1} ...>
                std::vector<int> with0 = a;
                with0.push_back(0);
                Q rhs = 0;
                for (size_t j = 0; j < a.size(); ++j) {
                    if (a[j] == 0) continue;
                    auto b = a;
                    --b[j];
                    rhs += psi_dvv(g, b);
                }
                CHECK(psi_dvv(g, with0) == rhs);
            });
            std::vector<int> cur2;
            vectors(n, 3 * g - 3 + n, cur2, [&](const std::vector<int>& a) {
                // dilaton: <tau_1 prod tau_ai> = (2g - 2 + n) <prod tau_ai>
                std::vector<int> with1 = a;
                with1.push_back(1);
                CHECK(psi_dvv(g, with1) == (2 * g - 2 + n) * psi_dvv(g, a));
            });
        }
}

TEST_CASE("known genus 1 values") {
    CHECK(psi_genus1({1}) == Q(1, 24));
    CHECK(psi_genus1({0, 2}) == Q(1, 24));
    CHECK(psi_genus1({1, 1}) == Q(1, 24));
    CHECK(psi_dvv(2, {4}) == Q(1, 1152));
    CHECK(psi_genus1({2}) == 0);
}

TEST_CASE("genus 1 generating function over M_{1,n}") {
    // int prod 1/(1 - a_i psi_i) = (1/24) [S^n - sum_{j>=2} (j-2)! e_j S^{n-j}]
    const std::vector<Q> weights = {2, -3, 5, 7, -1, 4};
    for (int n = 1; n <= 6; ++n) {
        std::vector<Q> w(weights.begin(), weights.begin() + n);
        Q lhs = 0;
        std::vector<int> cur;
        vectors(n, n, cur, [&](const std::vector<int>& a) {
            Q m = 1;
            for (int i = 0; i < n; ++i) m *= pw(w[i], a[i]);
            lhs += m * psi_genus1(a);
        });
        Q S = 0;
        for (auto& x : w) S += x;
        std::vector<Q> e(n + 1, 0);
        e[0] = 1;
        for (auto& x : w)
            for (int j = n; j >= 1; --j) e[j] += e[j - 1] * x;
        Q rhs = pw(S, n);
        Q fact = 1;
        for (int j = 2; j <= n; ++j) {
            if (j > 2) fact *= j - 2;
            rhs -= fact * e[j] * pw(S, n - j);
        }
        CHECK(lhs == rhs / 24);
    }
}

TEST_CASE("dimension mismatch gives zero") {
    CHECK(psi_genus0({1, 0, 0, 1}) == 0);
    CHECK(psi_dvv(0, {0, 0}) == 0);
    CHECK(psi_dvv(1, {0}) == 0);
}
