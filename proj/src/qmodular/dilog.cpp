#include "fermat/qmodular/dilog.hpp"

#include <stdexcept>

#include "fermat/exact/poly.hpp"

namespace fermat {

namespace {

// Polynomial in w as a (long-truncation) series helper.
HalfSeries poly_series(const std::vector<Rational>& coeffs, int trunc) {
  HalfSeries::Terms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0 && static_cast<int>(i) <= trunc) t.emplace(static_cast<int>(i), coeffs[i]);
  return HalfSeries(std::move(t), trunc);
}

// (sign w)^{m^2} / prod_{i<m} (w^{2m} - w^{2i}), exact to w^{wN}.
HalfSeries dilog_coefficient(int m, int wN, int sign) {
  // Denominator as an exact polynomial in w.
  RatPoly den = RatPoly::constant(1);
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> f(2 * m + 1);
    f[2 * m] += 1;
    f[2 * i] -= 1;
    den = den * RatPoly(std::move(f));
  }
  // Clear the common power of w: the denominator has valuation m(m-1).
  int val = 0;
  while (den.coeff(val) == 0) ++val;
  const int num_exp = m * m;
  if (num_exp < val) throw std::logic_error("quantum_dilog: coefficient is not a power series");
  std::vector<Rational> unit(den.coeffs().begin() + val, den.coeffs().end());
  const HalfSeries inv = poly_series(unit, wN).inverse();
  const Rational lead = (sign < 0 && (num_exp % 2 == 1)) ? Rational(-1) : Rational(1);
  return HalfSeries::monomial(lead, num_exp - val, wN) * inv;
}

}  // namespace

BiSeries quantum_dilog(int xN, int wN, int half_power_sign) {
  if (xN < 1 || wN < 1) throw std::invalid_argument("quantum_dilog: truncations must be >= 1");
  if (half_power_sign != 1 && half_power_sign != -1)
    throw std::invalid_argument("quantum_dilog: sign must be +1 or -1");
  std::vector<HalfSeries> coeffs;
  coeffs.push_back(HalfSeries::constant(1, wN));
  for (int m = 1; m <= xN; ++m) coeffs.push_back(dilog_coefficient(m, wN, half_power_sign));
  return BiSeries(std::move(coeffs));
}

std::vector<HalfSeries> jm_extracted_all(int xN, int wN, int half_power_sign) {
  const BiSeries logs = series_log(quantum_dilog(xN, wN, half_power_sign));
  return {logs.coeffs().begin() + 1, logs.coeffs().end()};
}

HalfSeries jm(int m, int wN, JmMode mode) {
  if (m < 1) throw std::invalid_argument("jm: m must be >= 1");
  if (mode == JmMode::extracted) return jm_extracted_all(m, wN).back();
  HalfSeries::Terms t;
  for (int e = m; e <= wN; e += 2 * m) t.emplace(e, make_rational(1, m));
  return HalfSeries(std::move(t), wN);
}

namespace {

// m^{-k} for any integer k.
Rational power_weight(int m, int k) {
  const Integer p = ipow(Integer(m), static_cast<unsigned long>(k < 0 ? -k : k));
  return k <= 0 ? Rational(p) : Rational(1) / Rational(p);
}

}  // namespace

HalfSeries gen_function(int k, int wN) {
  if (k % 2 == 0) throw std::invalid_argument("gen_function: k must be odd");
  HalfSeries acc(wN);
  for (int m = 1; m <= wN; ++m) acc += jm(m, wN, JmMode::closed) * (power_weight(m, k) * m);
  return acc;
}

HalfSeries gen_function_double_sum(int k, int wN) {
  if (k % 2 == 0) throw std::invalid_argument("gen_function_double_sum: k must be odd");
  HalfSeries::Terms t;
  for (int m = 1; m <= wN; ++m)
    for (int r = 1; m * r <= wN; ++r) {
      const Rational c = power_weight(m, k);
      t[m * r] += c;
      if (2 * m * r <= wN) t[2 * m * r] -= c;
    }
  return HalfSeries(std::move(t), wN);
}

}  // namespace fermat
