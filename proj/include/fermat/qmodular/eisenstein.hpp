#pragma once

#include "fermat/exact/arith.hpp"
#include "fermat/exact/half_series.hpp"

namespace fermat {

/// Sum of divisors.
Integer sigma1(int m);

/// E_2 = 1 - 24 sum sigma_1(m) q^m to q^{qN}; the stored exponent is the power of q.
HalfSeries eisenstein_e2(int qN);

/// 24 * gen_function(-1) + E_2(w) - E_2(w^2), i.e. with the q-variable of
/// E_2 identified with w. Vanishes identically.
HalfSeries quasimodular_check(int wN);

/// Same residual with E_2(w^2) replaced by its constant term.
HalfSeries quasimodular_negative_control(int wN);

}  // namespace fermat
