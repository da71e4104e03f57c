#pragma once
// Closed forms and localization sums for local P^2 and local P^1 x P^1.

#include "cy4/qseries.hpp"

namespace cy4 {

using Partition = std::vector<int>;  // parts in decreasing order

std::vector<Partition> partitions(int d);
Z zfactor(const Partition& p);  // |Aut p| * prod p_i

Q p2_genus0_point(int d);
// -(1/24) log(1+4q); throws if it disagrees with (1/12) log sum (-1)^d C(2d,d) q^d
Series p2_genus1_series(RingPtr R);

Q p1p1_genus0_point(int d1, int d2);
Series p1p1_genus1_series(RingPtr R);

enum class LocalizationVariant { corrected, as_printed };

// Partition sums over moduli of pointed curves, contracted against psi integrals.
// The corrected variant uses 1/(1+n_j psi) on the second factor and doubles genus 1.
Q p1p1_localization(int g, int d1, int d2, LocalizationVariant v = LocalizationVariant::corrected);

// c_2(T_X) as a multiple of the point-dual class of the base, read off the
// total Chern class expansion.
int local_c2_coefficient(const std::string& model);

}  // namespace cy4
