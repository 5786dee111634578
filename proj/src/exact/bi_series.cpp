#include "fermat/exact/bi_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fermat {

BiSeries::BiSeries(std::vector<HalfSeries> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("BiSeries: need at least the x^0 term");
}

BiSeries::BiSeries(int xtrunc, int wtrunc) : coeffs_(xtrunc + 1, HalfSeries(wtrunc)) {
  if (xtrunc < 0) throw std::invalid_argument("BiSeries: negative x-truncation");
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  const int xt = std::min(a.xtrunc(), b.xtrunc());
  std::vector<HalfSeries> out;
  for (int m = 0; m <= xt; ++m) out.push_back(a[m] + b[m]);
  return BiSeries(std::move(out));
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
  const int xt = std::min(a.xtrunc(), b.xtrunc());
  std::vector<HalfSeries> out;
  for (int m = 0; m <= xt; ++m) out.push_back(a[m] - b[m]);
  return BiSeries(std::move(out));
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  const int xt = std::min(a.xtrunc(), b.xtrunc());
  std::vector<HalfSeries> out;
  for (int m = 0; m <= xt; ++m) {
    HalfSeries acc = a[0] * b[m];
    for (int i = 1; i <= m; ++i) acc += a[i] * b[m - i];
    out.push_back(std::move(acc));
  }
  return BiSeries(std::move(out));
}

// Both use the logarithmic-derivative recurrence x g' f = x f', which gives
// the same truncated result as the Mercator/exponential sums in O(xtrunc^2)
// series products.
BiSeries series_log(const BiSeries& f) {
  const HalfSeries& f0 = f[0];
  if (f0.terms().size() != 1 || f0.terms().begin()->first != 0 || f0.terms().begin()->second != 1)
    throw std::domain_error("series_log: constant x-term must be 1");
  const int xt = f.xtrunc();
  std::vector<HalfSeries> g;
  g.push_back(HalfSeries(f0.trunc()));
  for (int m = 1; m <= xt; ++m) {
    HalfSeries acc = f[m] * Rational(m);
    for (int j = 1; j < m; ++j) acc -= (g[j] * f[m - j]) * Rational(j);
    g.push_back(acc * make_rational(1, m));
  }
  return BiSeries(std::move(g));
}

BiSeries series_exp(const BiSeries& g) {
  if (!g[0].is_zero()) throw std::domain_error("series_exp: constant x-term must be 0");
  const int xt = g.xtrunc();
  std::vector<HalfSeries> h;
  h.push_back(HalfSeries::constant(1, g[0].trunc()));
  for (int m = 1; m <= xt; ++m) {
    HalfSeries acc(g[m].trunc());
    for (int j = 1; j <= m; ++j) acc += (g[j] * h[m - j]) * Rational(j);
    h.push_back(acc * make_rational(1, m));
  }
  return BiSeries(std::move(h));
}

}  // namespace fermat
