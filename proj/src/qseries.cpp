#include "cy4/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace cy4 {

std::string to_string(const Q& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Z& x) { return x.get_str(); }

Q parse_rational(std::string_view s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '"' && ch != '\'') t += ch;
    if (t.empty()) throw Error("empty rational");
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Q(Z(t));
        Z num(t.substr(0, slash)), den(t.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in '" + std::string(s) + "'");
        Q q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("bad rational '" + std::string(s) + "'");
    }
}

Q frac(const Z& num, const Z& den) {
    if (den == 0) throw Error("zero denominator");
    Q q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Q& x) { return x.get_den() == 1; }

std::string exp_string(const Exp& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s;
}

Exp operator+(const Exp& a, const Exp& b) {
    Exp c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Exp operator-(const Exp& a, const Exp& b) {
    Exp c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

Exp scaled(const Exp& a, int k) {
    Exp c(a);
    for (auto& x : c) x *= k;
    return c;
}

bool is_zero(const Exp& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool is_effective(const Exp& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<int> weights, int D) : w_(std::move(weights)), D_(D) {
    if (w_.empty()) throw Error("ring needs at least one variable");
    for (int x : w_)
        if (x <= 0) throw Error("weights must be positive");
    if (D < 0) throw Error("negative truncation");
    const int r = static_cast<int>(w_.size());
    long total = 1;
    for (int i = 0; i < r; ++i) {
        dims_.push_back(D / w_[i] + 1);
        total *= dims_.back();
    }
    Exp e(r, 0);
    for (long g = 0; g < total; ++g) {
        long t = g;
        for (int i = r - 1; i >= 0; --i) {
            e[i] = static_cast<int>(t % dims_[i]);
            t /= dims_[i];
        }
        if (degree(e) <= D) mons_.push_back(e);
    }
    std::sort(mons_.begin(), mons_.end(), [this](const Exp& a, const Exp& b) {
        int da = degree(a), db = degree(b);
        return da != db ? da < db : a < b;
    });
    grid_.assign(total, -1);
    for (size_t k = 0; k < mons_.size(); ++k) {
        long g = 0;
        for (int i = 0; i < r; ++i) g = g * dims_[i] + mons_[k][i];
        grid_[g] = static_cast<long>(k);
        deg_.push_back(degree(mons_[k]));
    }
    const size_t n = mons_.size();
    add_.assign(n * n, -1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (deg_[i] + deg_[j] <= D_) add_[i * n + j] = index(mons_[i] + mons_[j]);
}

int Ring::degree(const Exp& e) const {
    int d = 0;
    for (size_t i = 0; i < w_.size(); ++i) d += w_[i] * e[i];
    return d;
}

long Ring::index(const Exp& e) const {
    if (e.size() != w_.size()) return -1;
    long g = 0;
    for (size_t i = 0; i < w_.size(); ++i) {
        if (e[i] < 0 || e[i] >= dims_[i]) return -1;
        g = g * dims_[i] + e[i];
    }
    return grid_[g];
}

RingPtr make_ring(std::vector<int> weights, int D) {
    return std::make_shared<const Ring>(std::move(weights), D);
}

// ---------------------------------------------------------------- Series

Series::Series(RingPtr R) : R_(std::move(R)), c_(R_->size()) {}

Series Series::one(RingPtr R) { return constant(std::move(R), 1); }

Series Series::constant(RingPtr R, const Q& c) {
    Series s(std::move(R));
    s.c_[0] = c;
    return s;
}

Series Series::monomial(RingPtr R, const Exp& e, const Q& c) {
    Series s(std::move(R));
    s.set(e, c);
    return s;
}

Series Series::from_map(RingPtr R, const std::map<Exp, Q>& m) {
    Series s(std::move(R));
    for (auto& [e, v] : m) {
        long k = s.R_->index(e);
        if (k >= 0) s.c_[k] += v;
    }
    return s;
}

Q Series::coeff(const Exp& e) const {
    long k = R_->index(e);
    return k < 0 ? Q(0) : c_[k];
}

void Series::set(const Exp& e, const Q& v) {
    long k = R_->index(e);
    if (k < 0) throw Error("exponent " + exp_string(e) + " outside truncation");
    c_[k] = v;
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Q& x) { return sgn(x) == 0; });
}

bool Series::operator==(const Series& o) const { return R_->same(*o.R_) && c_ == o.c_; }

void Series::check(const Series& o) const {
    if (!R_ || !o.R_ || !R_->same(*o.R_)) throw Error("series truncation mismatch");
}

Series& Series::operator+=(const Series& o) {
    check(o);
    for (size_t k = 0; k < c_.size(); ++k)
        if (sgn(o.c_[k])) c_[k] += o.c_[k];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    check(o);
    for (size_t k = 0; k < c_.size(); ++k)
        if (sgn(o.c_[k])) c_[k] -= o.c_[k];
    return *this;
}

Series& Series::operator*=(const Q& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

void Series::add_scaled(const Series& o, const Q& s) {
    check(o);
    if (sgn(s) == 0) return;
    for (size_t k = 0; k < c_.size(); ++k)
        if (sgn(o.c_[k])) c_[k] += o.c_[k] * s;
}

Series Series::operator+(const Series& o) const { Series r(*this); r += o; return r; }
Series Series::operator-(const Series& o) const { Series r(*this); r -= o; return r; }
Series Series::operator-() const { Series r(*this); r *= Q(-1); return r; }
Series Series::operator*(const Q& s) const { Series r(*this); r *= s; return r; }

Series Series::operator*(const Series& o) const {
    check(o);
    Series r(R_);
    const size_t n = c_.size();
    const int D = R_->D();
    std::vector<size_t> nz;
    for (size_t j = 0; j < n; ++j)
        if (sgn(o.c_[j])) nz.push_back(j);
    Q t;
    for (size_t i = 0; i < n; ++i) {
        if (sgn(c_[i]) == 0) continue;
        const int di = R_->degree_of(i);
        for (size_t j : nz) {
            if (di + R_->degree_of(j) > D) break;
            long k = R_->sum_index(i, j);
            mpq_mul(t.get_mpq_t(), c_[i].get_mpq_t(), o.c_[j].get_mpq_t());
            r.c_[k] += t;
        }
    }
    return r;
}

Series Series::theta(int i) const {
    Series r(R_);
    for (size_t k = 0; k < c_.size(); ++k) {
        int e = R_->mono(k)[i];
        if (e && sgn(c_[k])) r.c_[k] = c_[k] * e;
    }
    return r;
}

Series Series::shifted(const Exp& a) const {
    Series r(R_);
    for (size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        long j = R_->index(R_->mono(k) + a);
        if (j >= 0) r.c_[j] = c_[k];
    }
    return r;
}

Series Series::without_constant() const {
    Series r(*this);
    if (!r.c_.empty()) r.c_[0] = 0;
    return r;
}

std::string Series::canonical() const {
    std::vector<size_t> idx;
    for (size_t k = 0; k < c_.size(); ++k)
        if (sgn(c_[k])) idx.push_back(k);
    std::sort(idx.begin(), idx.end(), [this](size_t a, size_t b) { return R_->mono(a) < R_->mono(b); });
    std::ostringstream os;
    for (size_t k : idx) os << exp_string(R_->mono(k)) << " : " << to_string(c_[k]) << "\n";
    return os.str();
}

Series log_unit(const Series& s) {
    if (s.constant_term() != 1) throw Error("log_unit: constant term must be 1");
    Series x = s.without_constant();
    Series res(s.ring()), p = Series::one(s.ring());
    for (int k = 1; k <= s.ring()->D(); ++k) {
        p = p * x;
        if (p.is_zero()) break;
        res.add_scaled(p, Q(k % 2 ? 1 : -1, k));
    }
    return res;
}

Series exp_nilpotent(const Series& s) {
    if (s.constant_term() != 0) throw Error("exp_nilpotent: nonzero constant term");
    Series res = Series::one(s.ring()), p = Series::one(s.ring());
    for (int k = 1; k <= s.ring()->D(); ++k) {
        p = p * s;
        p *= Q(1, k);
        if (p.is_zero()) break;
        res += p;
    }
    return res;
}

Series inverse(const Series& s) {
    Q c0 = s.constant_term();
    if (c0 == 0) throw Error("inverse: zero constant term");
    Series x = s.without_constant() * Q(-1 / c0);
    Series res = Series::one(s.ring()), p = Series::one(s.ring());
    for (int k = 1; k <= s.ring()->D(); ++k) {
        p = p * x;
        if (p.is_zero()) break;
        res += p;
    }
    res *= Q(1 / c0);
    return res;
}

Series power(const Series& s, int k) {
    Series r = Series::one(s.ring());
    for (int i = 0; i < k; ++i) r = r * s;
    return r;
}

// ---------------------------------------------------------------- LogSeries

LogSeries LogSeries::from_series(const Series& s, int cap) {
    LogSeries L(s.ring(), cap);
    L.add(Exp(s.ring()->r(), 0), s);
    return L;
}

Series LogSeries::part(const Exp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Series(R_) : it->second;
}

void LogSeries::add(const Exp& e, const Series& s, const Q& scale) {
    int d = 0;
    for (int x : e) d += x;
    if (d > cap_) throw Error("log-degree cap exceeded");
    auto it = t_.find(e);
    if (it == t_.end()) {
        Series v = s * scale;
        if (!v.is_zero()) t_.emplace(e, std::move(v));
        return;
    }
    it->second.add_scaled(s, scale);
    if (it->second.is_zero()) t_.erase(it);
}

bool LogSeries::is_zero() const { return t_.empty(); }

int LogSeries::log_degree() const {
    int m = 0;
    for (auto& [e, s] : t_) {
        int d = 0;
        for (int x : e) d += x;
        m = std::max(m, d);
    }
    return m;
}

LogSeries LogSeries::operator+(const LogSeries& o) const {
    LogSeries r(*this);
    for (auto& [e, s] : o.t_) r.add(e, s);
    return r;
}

LogSeries LogSeries::operator*(const LogSeries& o) const {
    LogSeries r(R_, std::max(cap_, o.cap_));
    for (auto& [ea, sa] : t_)
        for (auto& [eb, sb] : o.t_) r.add(ea + eb, sa * sb);
    return r;
}

LogSeries LogSeries::operator*(const Series& s) const {
    LogSeries r(R_, cap_);
    for (auto& [e, v] : t_) r.add(e, v * s);
    return r;
}

LogSeries LogSeries::theta(int i) const {
    LogSeries r(R_, cap_);
    for (auto& [e, s] : t_) {
        r.add(e, s.theta(i));
        if (e[i] > 0) {
            Exp f = e;
            --f[i];
            r.add(f, s, Q(e[i]));
        }
    }
    return r;
}

// ---------------------------------------------------------------- composition

namespace {

struct Composer {
    const Series& s;
    std::vector<std::vector<Series>> pw;  // pw[i][e] = (q_i u_i)^e

    Composer(const Series& s_, const std::vector<Series>& units) : s(s_) {
        const auto& R = *s.ring();
        const int r = R.r();
        std::vector<int> maxe(r, 0);
        for (size_t k = 0; k < s.size(); ++k)
            if (sgn(s[k]))
                for (int i = 0; i < r; ++i) maxe[i] = std::max(maxe[i], R.mono(k)[i]);
        pw.resize(r);
        for (int i = 0; i < r; ++i) {
            Exp ui(r, 0);
            ui[i] = 1;
            Series up = Series::one(s.ring());
            pw[i].push_back(up);
            for (int e = 1; e <= maxe[i]; ++e) {
                up = up * units[i];
                pw[i].push_back(up.shifted(scaled(ui, e)));
            }
        }
    }

    Series run(const std::vector<size_t>& idx, int v) const {
        const auto& R = *s.ring();
        Series res(s.ring());
        if (v == R.r() - 1) {
            for (size_t k : idx) res.add_scaled(pw[v][R.mono(k)[v]], s[k]);
            return res;
        }
        std::map<int, std::vector<size_t>> groups;
        for (size_t k : idx) groups[R.mono(k)[v]].push_back(k);
        for (auto& [e, g] : groups) {
            Series inner = run(g, v + 1);
            if (e == 0)
                res += inner;
            else
                res += pw[v][e] * inner;
        }
        return res;
    }
};

}  // namespace

Series compose(const Series& s, const std::vector<Series>& units) {
    if (static_cast<int>(units.size()) != s.ring()->r()) throw Error("compose: wrong number of units");
    for (auto& u : units)
        if (u.constant_term() == 0) throw Error("compose: z_i(q) is not q_i times a unit");
    std::vector<size_t> idx;
    for (size_t k = 0; k < s.size(); ++k)
        if (sgn(s[k])) idx.push_back(k);
    if (idx.empty()) return Series(s.ring());
    Composer c(s, units);
    return c.run(idx, 0);
}

std::vector<Series> invert_mirror_map(const std::vector<Series>& h) {
    if (h.empty()) throw Error("invert_mirror_map: empty input");
    const auto& R = h[0].ring();
    for (auto& x : h)
        if (x.constant_term() != 0) throw Error("invert_mirror_map: h_i(0) must vanish");
    std::vector<Series> u(h.size(), Series::one(R));
    for (int it = 0; it <= R->D() + 1; ++it) {
        std::vector<Series> nu;
        for (auto& hi : h) nu.push_back(exp_nilpotent(-compose(hi, u)));
        bool same = nu == u;
        u = std::move(nu);
        if (same) break;
    }
    return u;
}

LogSeries substitute(const LogSeries& A, const std::vector<Series>& units) {
    const auto& R = A.ring();
    const int r = R->r();
    std::vector<LogSeries> shift;
    for (int i = 0; i < r; ++i) {
        LogSeries L(R, A.cap());
        Exp ei(r, 0);
        ei[i] = 1;
        L.add(ei, Series::one(R));
        L.add(Exp(r, 0), log_unit(units[i]));
        shift.push_back(L);
    }
    LogSeries res(R, A.cap());
    for (auto& [e, s] : A.terms()) {
        LogSeries T = LogSeries::from_series(compose(s, units), A.cap());
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < e[i]; ++k) T = T * shift[i];
        res = res + T;
    }
    return res;
}

Series z_of_q(const Series& unit, int i) {
    Exp ei(unit.ring()->r(), 0);
    ei[i] = 1;
    return unit.shifted(ei);
}

}  // namespace cy4
