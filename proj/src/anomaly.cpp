#include "cy4/anomaly.hpp"

#include <algorithm>
#include <numeric>

namespace cy4 {

namespace {

Series det(const std::vector<std::vector<Series>>& M) {
    const int n = static_cast<int>(M.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Series res(M[0][0].ring());
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Series t = M[0][perm[0]];
        for (int i = 1; i < n; ++i) t = t * M[i][perm[i]];
        res.add_scaled(t, Q(inv % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return res;
}

}  // namespace

std::vector<Q> limit_targets(const std::vector<Q>& c3) {
    std::vector<Q> out;
    for (auto& x : c3) out.push_back(Q(-x / 24));
    return out;
}

F1Result f1_series(const FrobeniusBasis& B, const MirrorMap& mm, const F1Spec& spec) {
    const auto& R = B.ring;
    const int r = R->r();
    F1Result res;
    res.expected = limit_targets(spec.c3);
    if (spec.solve_logz) {
        if (static_cast<int>(res.expected.size()) != r) throw Error("f1: solving c_i needs int c_3 ^ J_i");
        for (int i = 0; i < r; ++i) res.logz.push_back(res.expected[i] - 1);
    } else {
        if (static_cast<int>(spec.logz.size()) != r) throw Error("f1: wrong number of log z coefficients");
        res.logz = spec.logz;
    }
    // z_i = q_i u_i so dz_i/dt_j = q_i (delta_ij u_i + theta_j u_i)
    std::vector<std::vector<Series>> M(r, std::vector<Series>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            M[i][j] = mm.units[i].theta(j);
            if (i == j) M[i][j] += mm.units[i];
        }
    Series s = log_unit(det(M));
    s.add_scaled(log_unit(compose(B.X0, mm.units)), spec.a);
    for (auto& d : spec.discriminants) {
        Series P = Series::from_map(R, d.poly);
        if (P.constant_term() != 1) throw Error("f1: discriminant must satisfy P(0) = 1");
        Series Pq = compose(P, mm.units);
        if (Pq.constant_term() != 1) throw Error("f1: P(z(q)) must have constant term 1");
        s.add_scaled(log_unit(Pq), d.b);
    }
    for (int i = 0; i < r; ++i) {
        s.add_scaled(log_unit(mm.units[i]), res.logz[i]);
        res.linear.push_back(1 + res.logz[i]);
    }
    res.series = s.without_constant();
    if (!res.expected.empty()) res.limit_ok = res.expected == res.linear;
    return res;
}

}  // namespace cy4
