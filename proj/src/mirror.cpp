#include "cy4/mirror.hpp"

namespace cy4 {

Q lookup(const Table& t, const Exp& beta) {
    auto it = t.find(beta);
    return it == t.end() ? Q(0) : it->second;
}

Table table_from_series(const Series& s) {
    Table t;
    const auto& R = *s.ring();
    for (size_t k = 1; k < s.size(); ++k)
        if (sgn(s[k])) t[R.mono(k)] = s[k];
    return t;
}

MirrorMap mirror_map(const FrobeniusBasis& B) {
    MirrorMap mm;
    Series iX0 = inverse(B.X0);
    for (auto& s : B.S) mm.h.push_back(s * iX0);
    mm.units = invert_mirror_map(mm.h);
    return mm;
}

Series two_point_function(const LogSeries& Pi, const Series& X0, const MirrorMap& mm) {
    const auto& R = X0.ring();
    const int r = R->r();
    Series iX0 = inverse(X0);
    LogSeries ratio(R, Pi.cap());
    for (auto& [e, s] : Pi.terms()) ratio.add(e, s * iX0);
    LogSeries W = substitute(ratio, mm.units);
    for (auto& [e, s] : W.terms()) {
        if (is_zero(e)) continue;
        if (!s.without_constant().is_zero())
            throw Error("log residue at log-exponent " + exp_string(e) + ": wrong kappa normalization");
    }
    return W.part(Exp(r, 0)).without_constant();
}

}  // namespace cy4
