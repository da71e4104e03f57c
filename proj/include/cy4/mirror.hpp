#pragma once
// Mirror map and genus-0 two-point functions.

#include "cy4/frobenius.hpp"

namespace cy4 {

// curve class -> invariant; absent classes are zero
using Table = std::map<Exp, Q>;
Q lookup(const Table& t, const Exp& beta);
Table table_from_series(const Series& s);  // beta != 0 coefficients

struct MirrorMap {
    std::vector<Series> h;      // t_i = L_i + h_i(z)
    std::vector<Series> units;  // z_i(q) = q_i u_i(q)
    Series z(int i) const { return z_of_q(units[i], i); }
};

MirrorMap mirror_map(const FrobeniusBasis& B);

// (Pi/X0)(z(q)) with the log polynomial part dropped; throws on a log residue
Series two_point_function(const LogSeries& Pi, const Series& X0, const MirrorMap& mm);

}  // namespace cy4
