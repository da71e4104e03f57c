#pragma once
// Exact truncated multivariate power series and log-series over Q.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cy4 {

using Q = mpq_class;
using Z = mpz_class;
using Exp = std::vector<int>;
using Matrix = std::vector<std::vector<Q>>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_string(const Q& x);          // always "num/den"
std::string to_string(const Z& x);
Q parse_rational(std::string_view s);
Q frac(const Z& num, const Z& den);         // canonical num/den
bool is_integer(const Q& x);
std::string exp_string(const Exp& e);       // "1,0,2"

Exp operator+(const Exp& a, const Exp& b);
Exp operator-(const Exp& a, const Exp& b);
Exp scaled(const Exp& a, int k);
bool is_zero(const Exp& a);
bool is_effective(const Exp& a);            // all components >= 0

// Monomials of weighted degree <= D, ordered by (degree, lex).
class Ring {
public:
    Ring(std::vector<int> weights, int D);

    int r() const { return static_cast<int>(w_.size()); }
    int D() const { return D_; }
    const std::vector<int>& weights() const { return w_; }
    size_t size() const { return mons_.size(); }
    const Exp& mono(size_t k) const { return mons_[k]; }
    int degree(const Exp& e) const;
    int degree_of(size_t k) const { return deg_[k]; }
    long index(const Exp& e) const;         // -1 when absent
    long sum_index(size_t i, size_t j) const { return add_[i * mons_.size() + j]; }
    bool same(const Ring& o) const { return w_ == o.w_ && D_ == o.D_; }

private:
    std::vector<int> w_;
    int D_;
    std::vector<Exp> mons_;
    std::vector<int> deg_;
    std::vector<int> dims_;
    std::vector<long> grid_;
    std::vector<long> add_;
};

using RingPtr = std::shared_ptr<const Ring>;
RingPtr make_ring(std::vector<int> weights, int D);

class Series {
public:
    Series() = default;
    explicit Series(RingPtr R);
    static Series one(RingPtr R);
    static Series constant(RingPtr R, const Q& c);
    static Series monomial(RingPtr R, const Exp& e, const Q& c = 1);
    static Series from_map(RingPtr R, const std::map<Exp, Q>& m);

    const RingPtr& ring() const { return R_; }
    size_t size() const { return c_.size(); }
    const Q& operator[](size_t k) const { return c_[k]; }
    Q& operator[](size_t k) { return c_[k]; }
    Q coeff(const Exp& e) const;
    void set(const Exp& e, const Q& v);
    Q constant_term() const { return c_.empty() ? Q(0) : c_[0]; }
    bool is_zero() const;
    bool operator==(const Series& o) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Q& s);
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    Series operator*(const Q& s) const;
    void add_scaled(const Series& o, const Q& s);

    Series theta(int i) const;
    Series shifted(const Exp& a) const;     // z^a * s, truncated
    Series without_constant() const;
    std::string canonical() const;

private:
    void check(const Series& o) const;
    RingPtr R_;
    std::vector<Q> c_;
};

Series log_unit(const Series& s);
Series exp_nilpotent(const Series& s);
Series inverse(const Series& s);
Series power(const Series& s, int k);

// Sum_e S_e * prod L_i^{e_i}, L_i = log z_i with theta_i L_j = delta_ij.
class LogSeries {
public:
    LogSeries() = default;
    explicit LogSeries(RingPtr R, int cap = 4) : R_(std::move(R)), cap_(cap) {}
    static LogSeries from_series(const Series& s, int cap = 4);

    const RingPtr& ring() const { return R_; }
    int cap() const { return cap_; }
    const std::map<Exp, Series>& terms() const { return t_; }
    Series part(const Exp& logexp) const;
    void add(const Exp& logexp, const Series& s, const Q& scale = 1);
    bool is_zero() const;
    int log_degree() const;

    LogSeries operator+(const LogSeries& o) const;
    LogSeries operator*(const LogSeries& o) const;
    LogSeries operator*(const Series& s) const;
    LogSeries theta(int i) const;

private:
    RingPtr R_;
    int cap_ = 4;
    std::map<Exp, Series> t_;
};

// s(z) at z_i = q_i * u_i(q).
Series compose(const Series& s, const std::vector<Series>& units);

// Given t_i = L_i + h_i(z), returns units u_i with z_i(q) = q_i u_i(q).
std::vector<Series> invert_mirror_map(const std::vector<Series>& h);

// Rewrites L_i(z) = L_i(q) + log u_i and composes the series parts.
LogSeries substitute(const LogSeries& A, const std::vector<Series>& units);

// z_i(q) = q_i u_i(q) truncated to the ring.
Series z_of_q(const Series& unit, int i);

}  // namespace cy4
