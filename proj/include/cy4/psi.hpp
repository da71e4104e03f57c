#pragma once
// psi-class intersection numbers <tau_a1 ... tau_an>_g for g = 0, 1.

#include "cy4/qseries.hpp"

namespace cy4 {

// (n-3)!/prod a_i! when sum a_i = n-3, else 0.
Q psi_genus0(const std::vector<int>& a);

// DVV recursion, memoized on the sorted exponent multiset. Thread safe.
Q psi_dvv(int g, const std::vector<int>& a);

inline Q psi_genus1(const std::vector<int>& a) { return psi_dvv(1, a); }

}  // namespace cy4
