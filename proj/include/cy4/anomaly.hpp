#pragma once
// Genus-1 free energy in the holomorphic limit.

#include "cy4/mirror.hpp"

#include <optional>

namespace cy4 {

struct Discriminant {
    Q b;
    std::map<Exp, Q> poly;  // P(z) with P(0) = 1
};

struct F1Spec {
    Q a = 0;
    std::vector<Discriminant> discriminants;
    std::vector<Q> logz;     // c_i multiplying L_i
    bool solve_logz = false; // fix c_i from the large volume limit
    std::vector<Q> c3;       // int c_3 ^ J_i, empty when unknown
};

struct F1Result {
    Series series;           // beta > 0 part, coefficients are N_{1,beta}
    std::vector<Q> linear;   // t-linear coefficients
    std::vector<Q> logz;     // c_i actually used
    std::vector<Q> expected; // -(1/24) int c_3 ^ J_i
    std::optional<bool> limit_ok;
};

// -(1/24) * int c_3 ^ J_i for a fourfold
std::vector<Q> limit_targets(const std::vector<Q>& c3);

// a log X0 + log det(dz/dt) + sum b_k log P_k(z) + sum c_i L_i at z = z(q)
F1Result f1_series(const FrobeniusBasis& B, const MirrorMap& mm, const F1Spec& spec);

}  // namespace cy4
