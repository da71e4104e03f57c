#pragma once
// Frobenius basis of a Picard-Fuchs system at the point of maximal unipotent monodromy.

#include "cy4/qseries.hpp"

namespace cy4 {

using ThetaPoly = std::map<Exp, Q>;

struct OpTerm {
    Exp shift;
    ThetaPoly poly;
};

// sum_m z^m p_m(theta)
struct PFOperator {
    std::vector<OpTerm> terms;
    int r() const { return terms.empty() ? 0 : static_cast<int>(terms[0].shift.size()); }
    // terms with equal shift merged, zero coefficients dropped
    PFOperator normalized() const;
    const ThetaPoly* indicial() const;
};

ThetaPoly poly_mul(const ThetaPoly& a, const ThetaPoly& b);
// product of linear factors sum_i f_i theta_i + f_r, times scale
ThetaPoly poly_from_factors(int r, const std::vector<std::vector<int>>& factors, const Q& scale = 1);

LogSeries apply_operator(const PFOperator& op, const LogSeries& s);
Series apply_operator(const PFOperator& op, const Series& s);

struct FrobeniusBasis {
    RingPtr ring;
    int rho_order = 3;
    Series X0;
    std::vector<Series> S;              // rho_i-linear coefficients
    std::vector<std::vector<Series>> P; // mixed second rho-derivatives d_i d_j

    LogSeries single_log(int i) const;  // X^i = X0 L_i + S_i
    // Pi = 1/2 sum kappa_ij (P_ij + S_i L_j + S_j L_i + X0 L_i L_j)
    LogSeries double_log(const Matrix& kappa) const;
};

FrobeniusBasis solve_frobenius(RingPtr R, const std::vector<PFOperator>& ops, int rho_order = 3);

// nonzero when some operator fails to annihilate s
bool annihilated(const std::vector<PFOperator>& ops, const LogSeries& s);

// double-log period for kappa, verified against every operator;
// throws when kappa is not attainable
LogSeries double_log_combination(const FrobeniusBasis& B, const std::vector<PFOperator>& ops, const Matrix& kappa);

}  // namespace cy4
