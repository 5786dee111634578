#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fermat/exact/arith.hpp"

namespace fermat {

// Dense univariate polynomial; coeffs()[i] is the coefficient of var^i.
// The leading coefficient is nonzero unless the polynomial is zero.
template <typename Coeff>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly constant(const Coeff& c) { return DensePoly(std::vector<Coeff>{c}); }
  static DensePoly monomial(const Coeff& c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = c;
    return DensePoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  const std::vector<Coeff>& coeffs() const { return c_; }

  template <typename Arg>
  Arg eval(const Arg& x) const {
    Arg acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Arg(*it);
    return acc;
  }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const Coeff& k) {
    for (auto& c : c_) c *= k;
    trim();
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const Coeff& k) { return a *= k; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return DensePoly(std::move(out));
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  /// Highest power first, e.g. "q^3+21q^2+181q+821"; rational
  /// coefficients print as "(1/2)t^2".
  std::string to_string(const std::string& var = "q") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      std::string coef = fermat::to_string(c_[i]);
      const bool negative = coef[0] == '-';
      if (negative) coef.erase(0, 1);
      if (negative) out += "-";
      else if (!out.empty()) out += "+";
      if (coef.find('/') != std::string::npos && i > 0) coef = "(" + coef + ")";
      if (i == 0) {
        out += coef;
      } else {
        if (coef != "1") out += coef;
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = DensePoly<Integer>;
using RatPoly = DensePoly<Rational>;

/// The polynomial binomial (t + t_shift)(t + t_shift - 1)...(t + t_shift - choose + 1) / choose!
/// as a polynomial in t. Exact at every integer t, including negative ones.
RatPoly poly_binomial(int t_shift, int choose);

/// Ordinary binomial coefficient, zero when k < 0 or k > n (n >= 0).
Integer binomial(long n, long k);

}  // namespace fermat
