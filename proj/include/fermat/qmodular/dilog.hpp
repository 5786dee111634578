#pragma once

#include <vector>

#include "fermat/exact/bi_series.hpp"
#include "fermat/exact/half_series.hpp"

namespace fermat {

/// sum_{m=0}^{xN} (sign * w)^{m^2} / ((q^m - 1)(q^m - q) ... (q^m - q^{m-1})) x^m,
/// q = w^2, each coefficient exact to w^{wN}. The symbol L^{1/2} is
/// represented by sign * q^{1/2}; the default sign -1 is the physical one.
BiSeries quantum_dilog(int xN, int wN, int half_power_sign = -1);

enum class JmMode { extracted, closed };

/// J_m(q) = (1/m) q^{m/2} / (1 - q^m), either read off the formal logarithm
/// of the quantum dilogarithm or expanded from the closed form.
HalfSeries jm(int m, int wN, JmMode mode);

/// All x^m coefficients, m = 1..xN, of log(quantum_dilog(xN, wN)).
std::vector<HalfSeries> jm_extracted_all(int xN, int wN, int half_power_sign = -1);

/// sum_{m>=1} m^{1-k} J_m(q), from the closed form of J_m.
HalfSeries gen_function(int k, int wN);

/// sum_{m,r>=1} m^{-k} (q^{mr/2} - q^{mr}), summed term by term.
HalfSeries gen_function_double_sum(int k, int wN);

}  // namespace fermat
