#include "cy4/frobenius.hpp"

#include <algorithm>
#include <functional>

namespace cy4 {

PFOperator PFOperator::normalized() const {
    std::map<Exp, ThetaPoly> m;
    for (auto& t : terms)
        for (auto& [e, c] : t.poly) m[t.shift][e] += c;
    PFOperator out;
    for (auto& [s, p] : m) {
        ThetaPoly q;
        for (auto& [e, c] : p)
            if (sgn(c)) q[e] = c;
        if (!q.empty()) out.terms.push_back({s, q});
    }
    return out;
}

const ThetaPoly* PFOperator::indicial() const {
    for (auto& t : terms)
        if (is_zero(t.shift)) return &t.poly;
    return nullptr;
}

ThetaPoly poly_mul(const ThetaPoly& a, const ThetaPoly& b) {
    ThetaPoly r;
    for (auto& [ea, va] : a)
        for (auto& [eb, vb] : b) r[ea + eb] += va * vb;
    for (auto it = r.begin(); it != r.end();) it = sgn(it->second) ? std::next(it) : r.erase(it);
    return r;
}

ThetaPoly poly_from_factors(int r, const std::vector<std::vector<int>>& factors, const Q& scale) {
    ThetaPoly res{{Exp(r, 0), scale}};
    for (auto& f : factors) {
        if (static_cast<int>(f.size()) != r + 1) throw Error("linear factor needs r+1 entries");
        ThetaPoly lin;
        if (f[r]) lin[Exp(r, 0)] = f[r];
        for (int i = 0; i < r; ++i) {
            if (!f[i]) continue;
            Exp e(r, 0);
            e[i] = 1;
            lin[e] = f[i];
        }
        res = poly_mul(res, lin);
    }
    return res;
}

LogSeries apply_operator(const PFOperator& op, const LogSeries& s) {
    const auto& R = s.ring();
    const int r = R->r();
    std::map<Exp, LogSeries> cache;
    cache.emplace(Exp(r, 0), s);
    std::function<const LogSeries&(const Exp&)> th = [&](const Exp& e) -> const LogSeries& {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        int i = 0;
        while (e[i] == 0) ++i;
        Exp f = e;
        --f[i];
        LogSeries v = th(f).theta(i);
        return cache.emplace(e, std::move(v)).first->second;
    };
    LogSeries out(R, s.cap());
    for (auto& t : op.terms) {
        LogSeries acc(R, s.cap());
        for (auto& [e, c] : t.poly) {
            for (auto& [le, ser] : th(e).terms()) acc.add(le, ser, c);
        }
        for (auto& [le, ser] : acc.terms()) out.add(le, ser.shifted(t.shift));
    }
    return out;
}

Series apply_operator(const PFOperator& op, const Series& s) {
    return apply_operator(op, LogSeries::from_series(s)).part(Exp(s.ring()->r(), 0));
}

namespace {

// jets live in a ring with unit weights truncated below rho_order
Series eval_jet(const ThetaPoly& p, const Exp& at, const RingPtr& J) {
    const int r = J->r();
    std::vector<std::vector<Series>> pw(r);
    Series res(J);
    for (auto& [e, c] : p) {
        Series term = Series::constant(J, c);
        for (int i = 0; i < r; ++i) {
            if (!e[i]) continue;
            auto& v = pw[i];
            if (v.empty()) {
                Exp u(r, 0);
                u[i] = 1;
                Series lin = Series::constant(J, at[i]) + Series::monomial(J, u);
                v.push_back(Series::one(J));
                v.push_back(lin);
            }
            while (static_cast<int>(v.size()) <= e[i]) v.push_back(v.back() * v[1]);
            term = term * v[e[i]];
        }
        res += term;
    }
    return res;
}

}  // namespace

FrobeniusBasis solve_frobenius(RingPtr R, const std::vector<PFOperator>& ops_in, int rho_order) {
    const int r = R->r();
    if (ops_in.empty()) throw Error("solve_frobenius: no operators");
    std::vector<PFOperator> ops;
    for (auto& op : ops_in) {
        auto n = op.normalized();
        if (n.r() != r) throw Error("solve_frobenius: operator arity mismatch");
        if (!n.indicial()) throw Error("solve_frobenius: operator without indicial part");
        for (auto& t : n.terms)
            if (!is_effective(t.shift)) throw Error("solve_frobenius: negative shift");
        ops.push_back(std::move(n));
    }
    RingPtr J = make_ring(std::vector<int>(r, 1), rho_order - 1);
    std::vector<Series> c(R->size(), Series(J));
    c[0] = Series::one(J);
    for (size_t k = 1; k < R->size(); ++k) {
        const Exp& a = R->mono(k);
        const PFOperator* chosen = nullptr;
        Series ind;
        for (auto& op : ops) {
            ind = eval_jet(*op.indicial(), a, J);
            if (sgn(ind.constant_term())) {
                chosen = &op;
                break;
            }
        }
        if (!chosen) throw Error("solve_frobenius: no invertible indicial jet at " + exp_string(a));
        Series rhs(J);
        for (auto& t : chosen->terms) {
            if (is_zero(t.shift)) continue;
            Exp b = a - t.shift;
            if (!is_effective(b)) continue;
            long kb = R->index(b);
            if (kb < 0 || c[kb].is_zero()) continue;
            rhs += eval_jet(t.poly, b, J) * c[kb];
        }
        c[k] = -(rhs * inverse(ind));
    }
    FrobeniusBasis B;
    B.ring = R;
    B.rho_order = rho_order;
    B.X0 = Series(R);
    B.S.assign(r, Series(R));
    B.P.assign(r, std::vector<Series>(r, Series(R)));
    for (size_t k = 0; k < R->size(); ++k) {
        B.X0[k] = c[k].constant_term();
        if (rho_order < 2) continue;
        for (int i = 0; i < r; ++i) {
            Exp u(r, 0);
            u[i] = 1;
            B.S[i][k] = c[k].coeff(u);
            if (rho_order < 3) continue;
            for (int j = 0; j < r; ++j) {
                Exp v = u;
                ++v[j];
                B.P[i][j][k] = c[k].coeff(v) * (i == j ? 2 : 1);
            }
        }
    }
    return B;
}

LogSeries FrobeniusBasis::single_log(int i) const {
    const int r = ring->r();
    LogSeries L(ring);
    Exp u(r, 0);
    u[i] = 1;
    L.add(u, X0);
    L.add(Exp(r, 0), S[i]);
    return L;
}

LogSeries FrobeniusBasis::double_log(const Matrix& kappa) const {
    const int r = ring->r();
    if (static_cast<int>(kappa.size()) != r) throw Error("kappa has wrong size");
    LogSeries Pi(ring);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            if (kappa[i][j] != kappa[j][i]) throw Error("kappa must be symmetric");
            Q k = kappa[i][j] / 2;
            if (sgn(k) == 0) continue;
            Exp ui(r, 0), uj(r, 0);
            ui[i] = 1;
            uj[j] = 1;
            Pi.add(Exp(r, 0), P[i][j], k);
            Pi.add(uj, S[i], k);
            Pi.add(ui, S[j], k);
            Pi.add(ui + uj, X0, k);
        }
    }
    return Pi;
}

bool annihilated(const std::vector<PFOperator>& ops, const LogSeries& s) {
    return std::all_of(ops.begin(), ops.end(), [&](const PFOperator& op) { return apply_operator(op, s).is_zero(); });
}

LogSeries double_log_combination(const FrobeniusBasis& B, const std::vector<PFOperator>& ops, const Matrix& kappa) {
    LogSeries Pi = B.double_log(kappa);
    if (!annihilated(ops, Pi)) throw Error("kappa not attainable from the double-log solutions");
    return Pi;
}

}  // namespace cy4
