#include "fermat/qmodular/eisenstein.hpp"

#include <stdexcept>

#include "fermat/qmodular/dilog.hpp"

namespace fermat {

Integer sigma1(int m) {
  if (m < 1) throw std::invalid_argument("sigma1: m must be >= 1");
  Integer s = 0;
  for (int d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    s += d;
    if (d != m / d) s += m / d;
  }
  return s;
}

HalfSeries eisenstein_e2(int qN) {
  if (qN < 1) throw std::invalid_argument("eisenstein_e2: qN must be >= 1");
  HalfSeries::Terms t;
  t.emplace(0, Rational(1));
  for (int m = 1; m <= qN; ++m) t.emplace(m, Rational(-24 * sigma1(m)));
  return HalfSeries(std::move(t), qN);
}

HalfSeries quasimodular_check(int wN) {
  if (wN < 4) throw std::invalid_argument("quasimodular_check: wN must be >= 4");
  const HalfSeries e2 = eisenstein_e2(wN);
  return gen_function(-1, wN) * Rational(24) + e2 - e2.substitute_power(2).truncated(wN);
}

HalfSeries quasimodular_negative_control(int wN) {
  if (wN < 4) throw std::invalid_argument("quasimodular_negative_control: wN must be >= 4");
  return gen_function(-1, wN) * Rational(24) + eisenstein_e2(wN) - HalfSeries::constant(1, wN);
}

}  // namespace fermat
