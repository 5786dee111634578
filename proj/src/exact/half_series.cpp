#include "fermat/exact/half_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fermat {

HalfSeries::HalfSeries(int trunc) : trunc_(trunc) {
  if (trunc < 0) throw std::invalid_argument("HalfSeries: negative truncation");
}

HalfSeries::HalfSeries(Terms terms, int trunc) : terms_(std::move(terms)), trunc_(trunc) {
  if (trunc < 0) throw std::invalid_argument("HalfSeries: negative truncation");
  if (!terms_.empty() && terms_.begin()->first < 0)
    throw std::invalid_argument("HalfSeries: negative exponent");
  normalize();
}

HalfSeries HalfSeries::constant(const Rational& c, int trunc) { return monomial(c, 0, trunc); }

HalfSeries HalfSeries::monomial(const Rational& c, int exponent, int trunc) {
  Terms t;
  t[exponent] = c;
  return HalfSeries(std::move(t), trunc);
}

void HalfSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first > trunc_ || it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Rational HalfSeries::coeff(int m) const {
  if (m < 0 || m > trunc_) throw std::out_of_range("HalfSeries::coeff beyond truncation");
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int HalfSeries::valuation() const { return terms_.empty() ? -1 : terms_.begin()->first; }

HalfSeries HalfSeries::truncated(int trunc) const {
  return HalfSeries(terms_, std::min(trunc, trunc_));
}

HalfSeries HalfSeries::substitute_power(int k) const {
  if (k < 1) throw std::invalid_argument("substitute_power: k must be positive");
  Terms t;
  for (const auto& [e, c] : terms_) t[e * k] = c;
  // Known coefficients of the substituted series extend to k*trunc + k - 1.
  return HalfSeries(std::move(t), k * trunc_ + k - 1);
}

HalfSeries HalfSeries::inverse() const {
  const Rational c0 = coeff(0);
  if (c0 == 0) throw std::domain_error("HalfSeries::inverse: constant term is zero");
  std::vector<Rational> out(trunc_ + 1);
  const Rational inv0 = 1 / c0;
  out[0] = inv0;
  for (int m = 1; m <= trunc_; ++m) {
    Rational acc = 0;
    for (auto it = terms_.upper_bound(0); it != terms_.end() && it->first <= m; ++it)
      acc += it->second * out[m - it->first];
    out[m] = -acc * inv0;
  }
  Terms t;
  for (int m = 0; m <= trunc_; ++m)
    if (out[m] != 0) t.emplace(m, out[m]);
  return HalfSeries(std::move(t), trunc_);
}

HalfSeries& HalfSeries::operator+=(const HalfSeries& other) {
  trunc_ = std::min(trunc_, other.trunc_);
  for (const auto& [e, c] : other.terms_) {
    if (e > trunc_) break;
    terms_[e] += c;
  }
  normalize();
  return *this;
}

HalfSeries& HalfSeries::operator-=(const HalfSeries& other) {
  trunc_ = std::min(trunc_, other.trunc_);
  for (const auto& [e, c] : other.terms_) {
    if (e > trunc_) break;
    terms_[e] -= c;
  }
  normalize();
  return *this;
}

HalfSeries& HalfSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HalfSeries operator*(const HalfSeries& a, const HalfSeries& b) {
  const int trunc = std::min(a.trunc_, b.trunc_);
  std::vector<Rational> acc(trunc + 1);
  std::vector<bool> touched(trunc + 1, false);
  for (const auto& [ea, ca] : a.terms_) {
    if (ea > trunc) break;
    for (const auto& [eb, cb] : b.terms_) {
      const int e = ea + eb;
      if (e > trunc) break;
      acc[e] += ca * cb;
      touched[e] = true;
    }
  }
  HalfSeries::Terms t;
  for (int e = 0; e <= trunc; ++e)
    if (touched[e] && acc[e] != 0) t.emplace(e, acc[e]);
  return HalfSeries(std::move(t), trunc);
}

bool operator==(const HalfSeries& a, const HalfSeries& b) {
  return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

std::string HalfSeries::to_string(const std::string& var) const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string coef = fermat::to_string(c);
    if (!out.empty()) out += (coef[0] == '-') ? " - " : " + ";
    else if (coef[0] == '-') out += "-";
    if (coef[0] == '-') coef.erase(0, 1);
    if (e == 0) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(" + var + "^" + std::to_string(trunc_ + 1) + ")";
}

}  // namespace fermat
