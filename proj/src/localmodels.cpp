#include "cy4/localmodels.hpp"

#include "cy4/psi.hpp"

#include <functional>

namespace cy4 {

namespace {

Z binom(long n, long k) {
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

void parts_rec(int left, int maxp, Partition& cur, std::vector<Partition>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
        cur.push_back(p);
        parts_rec(left - p, p, cur, out);
        cur.pop_back();
    }
}

// sum over exponent vectors with total k of prod c_i^{e_i} * f(e)
Q contract(const std::vector<Q>& c, int total, int extra, int g) {
    const int n = static_cast<int>(c.size()) + extra;
    std::vector<int> e(n, 0);
    Q acc = 0;
    std::function<void(int, int, Q)> rec = [&](int i, int left, Q w) {
        if (i == static_cast<int>(c.size())) {
            if (left) return;
            Q v = g == 0 ? psi_genus0(e) : psi_genus1(e);
            acc += w * v;
            return;
        }
        Q p = 1;
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k, w * p);
            p *= c[i];
        }
        e[i] = 0;
    };
    rec(0, total, Q(1));
    return acc;
}

}  // namespace

std::vector<Partition> partitions(int d) {
    std::vector<Partition> out;
    if (d < 0) return out;
    Partition cur;
    parts_rec(d, d, cur, out);
    return out;
}

Z zfactor(const Partition& p) {
    Z r = 1;
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        Z f;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        r *= f;
        i = j;
    }
    for (int x : p) r *= x;
    return r;
}

Q p2_genus0_point(int d) {
    if (d <= 0) throw Error("p2_genus0_point: degree must be positive");
    Q v = frac(binom(2 * d, d), Z(2) * d * d);
    return d % 2 ? Q(-v) : v;
}

Series p2_genus1_series(RingPtr R) {
    if (R->r() != 1) throw Error("p2_genus1_series: one variable expected");
    Series a = Series::monomial(R, {1}, 4) + Series::one(R);
    Series lhs = log_unit(a) * Q(-1, 24);
    Series b(R);
    for (int d = 0; d <= R->D(); ++d) b.set({d}, Q(d % 2 ? -binom(2 * d, d) : binom(2 * d, d)));
    Series rhs = log_unit(b) * Q(1, 12);
    if (!(lhs == rhs)) throw Error("p2_genus1_series: closed forms disagree");
    return lhs;
}

Q p1p1_genus0_point(int d1, int d2) {
    if (d1 < 0 || d2 < 0 || d1 + d2 == 0) throw Error("p1p1_genus0_point: bad class");
    Z b = binom(d1 + d2, d1);
    return frac(b * b, Z(d1 + d2) * (d1 + d2));
}

Series p1p1_genus1_series(RingPtr R) {
    if (R->r() != 2) throw Error("p1p1_genus1_series: two variables expected");
    Series G(R);
    for (size_t k = 0; k < R->size(); ++k) {
        const Exp& e = R->mono(k);
        Z b = binom(e[0] + e[1], e[0]);
        G[k] = b * b;
    }
    return log_unit(G) * Q(1, 12);
}

Q p1p1_localization(int g, int d1, int d2, LocalizationVariant v) {
    if (g != 0 && g != 1) throw Error("p1p1_localization: genus 0 or 1");
    if (d1 < 0 || d2 < 0 || d1 + d2 == 0) throw Error("p1p1_localization: bad class");
    const int sign_n = v == LocalizationVariant::corrected ? -1 : 1;
    Q total = 0;
    for (auto& m : partitions(d1)) {
        for (auto& n : partitions(d2)) {
            // 1/(1 + a psi) = sum (-a)^k psi^k
            std::vector<Q> c;
            for (int x : m) c.push_back(Q(-x));
            for (int x : n) c.push_back(Q(sign_n * x));
            const int len = static_cast<int>(c.size());
            Q integral;
            if (g == 1) integral = contract(c, len, 0, 1);
            else if (len == 1) integral = 1 / c[0];  // unstable M_{0,2}: 1/(a_1 + a_2)
            else integral = contract(c, len + 1 - 3, 1, 0);
            Q w = frac((d1 + d2) % 2 ? -1 : 1, zfactor(m) * zfactor(n));
            total += w * integral;
        }
    }
    if (g == 1 && v == LocalizationVariant::corrected) total *= 2;
    return total;
}

int local_c2_coefficient(const std::string& model) {
    // total Chern class as a product of linear forms sum a_i H_i (+1)
    using Poly = std::map<Exp, Z>;
    auto mul = [](const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ea, va] : a)
            for (auto& [eb, vb] : b) r[ea + eb] += va * vb;
        return r;
    };
    std::vector<std::vector<int>> factors;
    Exp target;
    int rk = 0;
    if (model == "local_p2") {
        rk = 1;
        factors = {{1}, {1}, {1}, {-1}, {-2}};  // (1+H)^3 (1-H)(1-2H)
        target = {2};
    } else if (model == "local_p1p1") {
        rk = 2;
        factors = {{2, 0}, {0, 2}, {-1, -1}, {-1, -1}};
        target = {1, 1};
    } else if (model == "local_p3") {
        rk = 1;
        factors = {{1}, {1}, {1}, {1}, {-4}};
        target = {2};
    } else {
        throw Error("local_c2_coefficient: unknown model '" + model + "'");
    }
    Poly c{{Exp(rk, 0), Z(1)}};
    for (auto& f : factors) {
        Poly lf{{Exp(rk, 0), Z(1)}};
        for (int i = 0; i < rk; ++i) {
            Exp e(rk, 0);
            e[i] = 1;
            if (f[i]) lf[e] = f[i];
        }
        c = mul(c, lf);
    }
    return static_cast<int>(c[target].get_si());
}

}  // namespace cy4
