#include "cy4/bps.hpp"

#include <numeric>

namespace cy4 {

Z sigma(int d) {
    if (d <= 0) throw Error("sigma: d must be positive");
    Z s = 0;
    for (int i = 1; i <= d; ++i)
        if (d % i == 0) s += i;
    return s;
}

namespace {

int content(const Exp& b) {
    int g = 0;
    for (int x : b) g = std::gcd(g, x);
    return g;
}

Q kernel0(int d, int n) {
    Q k = 1;
    int p = n - 3;
    for (int i = 0; i < (p < 0 ? -p : p); ++i) k *= d;
    return p < 0 ? Q(1 / k) : k;
}

Exp divided(const Exp& b, int d) {
    Exp c(b);
    for (auto& x : c) x /= d;
    return c;
}

}  // namespace

Table invert_genus0(const Table& N, int insertions, const Ring& R) {
    Table n;
    for (size_t k = 1; k < R.size(); ++k) {
        const Exp& b = R.mono(k);
        Q v = lookup(N, b);
        const int g = content(b);
        for (int d = 2; d <= g; ++d)
            if (g % d == 0) v -= kernel0(d, insertions) * lookup(n, divided(b, d));
        if (sgn(v)) n[b] = v;
    }
    return n;
}

Table forward_genus0(const Table& n, int insertions, const Ring& R) {
    Table N;
    for (size_t k = 1; k < R.size(); ++k) {
        const Exp& b = R.mono(k);
        Q v = 0;
        const int g = content(b);
        for (int d = 1; d <= g; ++d)
            if (g % d == 0) v += kernel0(d, insertions) * lookup(n, divided(b, d));
        if (sgn(v)) N[b] = v;
    }
    return N;
}

PairTable meeting_invariants(const MeetingInput& in, const MeetingConvention& conv, const Ring& R) {
    const size_t ns = in.nS.size();
    if (in.ginv.size() != ns) throw Error("meeting: pairing size mismatch");
    std::vector<Table> nS(ns);
    for (size_t i = 0; i < ns; ++i)
        for (auto& [b, v] : in.nS[i]) nS[i][b] = v * conv.scale;
    Table nc2;
    if (conv.use_c2)
        for (auto& [b, v] : in.nc2) nc2[b] = v * conv.scale;

    auto pair = [&](const Exp& b1, const Exp& b2) {
        Q s = 0;
        for (size_t i = 0; i < ns; ++i) {
            Q x = lookup(nS[i], b1);
            if (sgn(x) == 0) continue;
            for (size_t j = 0; j < ns; ++j)
                if (sgn(in.ginv[i][j])) s += x * in.ginv[i][j] * lookup(nS[j], b2);
        }
        return s;
    };

    PairTable m;
    // classes reached outside the effective cone vanish (induction on degree)
    auto get = [&](const Exp& b1, const Exp& b2) -> Q {
        if (R.degree(b1) <= 0 || R.degree(b2) <= 0) return 0;
        if (!is_effective(b1) || !is_effective(b2)) return 0;
        auto it = m.find({b1, b2});
        if (it == m.end()) throw Error("meeting: recursion order violated");
        return it->second;
    };

    std::vector<size_t> cls;
    for (size_t k = 1; k < R.size(); ++k) cls.push_back(k);
    for (int total = 2; total <= R.D(); ++total) {
        for (size_t i : cls) {
            const int d1 = R.degree_of(i);
            if (d1 >= total) break;
            for (size_t j : cls) {
                const int d2 = R.degree_of(j);
                if (d1 + d2 > total) break;
                if (d1 + d2 < total) continue;
                const Exp& b1 = R.mono(i);
                const Exp& b2 = R.mono(j);
                Q v;
                if (b1 != b2) {
                    v = pair(b1, b2) + get(b1, b2 - b1) + get(b1 - b2, b2);
                } else {
                    v = lookup(nc2, b1) + pair(b1, b1);
                    for (size_t s : cls) {
                        if (R.degree_of(s) >= d1) break;
                        Exp rest = b1 - R.mono(s);
                        if (is_effective(rest) && !is_zero(rest)) v -= get(R.mono(s), rest);
                    }
                }
                m[{b1, b2}] = v;
            }
        }
    }
    return m;
}

bool is_symmetric(const PairTable& m) {
    for (auto& [k, v] : m) {
        auto it = m.find({k.second, k.first});
        if (it == m.end() || it->second != v) return false;
    }
    return true;
}

Table genus1_correction(const Table& nc2, const PairTable& m, const Ring& R) {
    Table corr;
    auto add_log = [&](const Exp& b, const Q& w) {
        // w * log(1 - q^b) = -w sum q^{kb}/k
        for (int k = 1;; ++k) {
            Exp kb = scaled(b, k);
            if (R.degree(kb) > R.D()) break;
            corr[kb] -= w / k;
        }
    };
    for (auto& [b, v] : nc2)
        if (R.degree(b) > 0) add_log(b, v / 24);
    Table msum;
    for (auto& [k, v] : m) {
        Exp s = k.first + k.second;
        if (R.degree(s) <= R.D()) msum[s] += v;
    }
    for (auto& [s, v] : msum) add_log(s, -v / 24);
    for (auto it = corr.begin(); it != corr.end();) it = sgn(it->second) ? std::next(it) : corr.erase(it);
    return corr;
}

Table invert_genus1(const Table& N1, const Table& nc2, const PairTable& m, const Ring& R) {
    Table corr = genus1_correction(nc2, m, R);
    Table n;
    for (size_t k = 1; k < R.size(); ++k) {
        const Exp& b = R.mono(k);
        Q v = lookup(N1, b) - lookup(corr, b);
        const int g = content(b);
        for (int d = 2; d <= g; ++d)
            if (g % d == 0) v -= frac(sigma(d), d) * lookup(n, divided(b, d));
        if (sgn(v)) n[b] = v;
    }
    return n;
}

Table forward_genus1(const Table& n1, const Table& nc2, const PairTable& m, const Ring& R) {
    Table N = genus1_correction(nc2, m, R);
    for (size_t k = 1; k < R.size(); ++k) {
        const Exp& b = R.mono(k);
        const int g = content(b);
        for (int d = 1; d <= g; ++d)
            if (g % d == 0) N[b] += frac(sigma(d), d) * lookup(n1, divided(b, d));
    }
    for (auto it = N.begin(); it != N.end();) it = sgn(it->second) ? std::next(it) : N.erase(it);
    return N;
}

std::vector<Exp> non_integral(const Table& t) {
    std::vector<Exp> out;
    for (auto& [b, v] : t)
        if (!is_integer(v)) out.push_back(b);
    return out;
}

Matrix invert_matrix(const Matrix& g) {
    const size_t n = g.size();
    Matrix a = g, inv(n, std::vector<Q>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Error("invert_matrix: not square");
        inv[i][i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) throw Error("invert_matrix: singular pairing");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Q piv = a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            Q f = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace cy4
