#pragma once

#include <map>
#include <string>

#include "fermat/exact/arith.hpp"

namespace fermat {

// Truncated power series in w = q^{1/2} with exact rational coefficients.
//
// Coefficients of w^m are known for 0 <= m <= trunc() and undefined beyond.
// Zero coefficients are never stored. Binary operations truncate to the
// smaller of the two operand truncations.
class HalfSeries {
 public:
  using Terms = std::map<int, Rational>;

  explicit HalfSeries(int trunc = 0);
  HalfSeries(Terms terms, int trunc);

  static HalfSeries constant(const Rational& c, int trunc);
  static HalfSeries monomial(const Rational& c, int exponent, int trunc);

  int trunc() const { return trunc_; }
  const Terms& terms() const { return terms_; }

  /// Coefficient of w^m; throws std::out_of_range beyond the truncation.
  Rational coeff(int m) const;
  bool is_zero() const { return terms_.empty(); }
  /// Lowest exponent with a nonzero coefficient, or -1 for the zero series.
  int valuation() const;

  HalfSeries truncated(int trunc) const;
  /// Substitute w -> w^k (k >= 1); the truncation scales accordingly.
  HalfSeries substitute_power(int k) const;
  /// Multiplicative inverse; requires an invertible constant term.
  HalfSeries inverse() const;

  HalfSeries& operator+=(const HalfSeries& other);
  HalfSeries& operator-=(const HalfSeries& other);
  HalfSeries& operator*=(const Rational& c);

  friend HalfSeries operator+(HalfSeries a, const HalfSeries& b) { return a += b; }
  friend HalfSeries operator-(HalfSeries a, const HalfSeries& b) { return a -= b; }
  friend HalfSeries operator-(HalfSeries a) { return a *= Rational(-1); }
  friend HalfSeries operator*(HalfSeries a, const Rational& c) { return a *= c; }
  friend HalfSeries operator*(const Rational& c, HalfSeries a) { return a *= c; }
  friend HalfSeries operator*(const HalfSeries& a, const HalfSeries& b);

  /// Equality as truncated series: same truncation and same coefficients.
  friend bool operator==(const HalfSeries& a, const HalfSeries& b);

  std::string to_string(const std::string& var = "w") const;

 private:
  void normalize();

  Terms terms_;
  int trunc_;
};

}  // namespace fermat
