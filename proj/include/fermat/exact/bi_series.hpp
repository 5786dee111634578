#pragma once

#include <vector>

#include "fermat/exact/half_series.hpp"

namespace fermat {

// Truncated series in a formal variable x whose coefficients are HalfSeries.
// Holds x^0 .. x^xtrunc; each coefficient carries its own w-truncation.
class BiSeries {
 public:
  explicit BiSeries(std::vector<HalfSeries> coeffs);
  /// Zero series with uniform w-truncation.
  BiSeries(int xtrunc, int wtrunc);

  int xtrunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  const HalfSeries& operator[](int m) const { return coeffs_.at(m); }
  HalfSeries& operator[](int m) { return coeffs_.at(m); }
  const std::vector<HalfSeries>& coeffs() const { return coeffs_; }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries& a, const BiSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<HalfSeries> coeffs_;
};

/// Formal logarithm in x. Requires the x^0 coefficient to be exactly 1
/// (throws std::domain_error otherwise).
BiSeries series_log(const BiSeries& f);

/// Formal exponential in x. Requires a zero x^0 coefficient.
BiSeries series_exp(const BiSeries& g);

}  // namespace fermat
