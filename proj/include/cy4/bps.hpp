#pragma once
// Integrality transforms: multicover inversion, meeting invariants, genus-1 extraction.

#include "cy4/mirror.hpp"

namespace cy4 {

Z sigma(int d);

// N_beta = sum_{d | beta} d^{n-3} n_{beta/d}
Table invert_genus0(const Table& N, int insertions, const Ring& R);
Table forward_genus0(const Table& n, int insertions, const Ring& R);

using PairTable = std::map<std::pair<Exp, Exp>, Q>;

struct MeetingConvention {
    std::string name = "rules";
    Q scale = 1;        // multiplies every 4-cycle insertion
    bool use_c2 = true; // n_0(c_2) term in the diagonal rule
};

struct MeetingInput {
    std::vector<Table> nS;  // n_0(S_i)
    Matrix ginv;            // g^{ij}
    Table nc2;              // n_0(c_2)
};

// All ordered pairs of effective classes with deg b1 + deg b2 <= R.D().
PairTable meeting_invariants(const MeetingInput& in, const MeetingConvention& conv, const Ring& R);
bool is_symmetric(const PairTable& m);

// The genus-1 correction series built from n_0(c_2) and ordered meeting pairs.
Table genus1_correction(const Table& nc2, const PairTable& m, const Ring& R);
Table invert_genus1(const Table& N1, const Table& nc2, const PairTable& m, const Ring& R);
Table forward_genus1(const Table& n1, const Table& nc2, const PairTable& m, const Ring& R);

std::vector<Exp> non_integral(const Table& t);

Matrix invert_matrix(const Matrix& g);

}  // namespace cy4
