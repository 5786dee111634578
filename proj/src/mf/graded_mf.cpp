#include "fermat/mf/graded_mf.hpp"

#include <stdexcept>

namespace fermat {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

GradedMF mf_make(int n, int a, int s) {
  if (n < 2) throw std::invalid_argument("mf_make: potential exponent must be >= 2");
  if (a < 1 || a > n - 1)
    throw std::invalid_argument("mf_make: factor split a=" + std::to_string(a) +
                                " outside [1, " + std::to_string(n - 1) + "]");
  return GradedMF{n, a, s, 0};
}

GradedMF mf_base(int n) { return mf_make(n, 1, 0); }

GradedMF mf_twist(const GradedMF& m, int k) {
  GradedMF out = m;
  out.s -= k;
  return out;
}

GradedMF mf_shift(const GradedMF& m, int j) {
  GradedMF out = m;
  out.shift += j;
  return out;
}

MFNormalForm normal_form(const GradedMF& m) {
  int a = m.a;
  int s = m.s;
  // Absorb the shift: [2] is twist by n, an odd remainder swaps the factors.
  const int half = floor_div(m.shift, 2);
  s -= m.n * half;
  if (m.shift - 2 * half == 1) {
    s -= a;
    a = m.n - a;
  }
  // s = r + n q  =>  M(a, s) = M(a, r)[-2q].
  const int q = floor_div(s, m.n);
  return MFNormalForm{m.n, a, s - q * m.n, -2 * q};
}

bool isomorphic(const GradedMF& x, const GradedMF& y) {
  return x.n == y.n && normal_form(x) == normal_form(y);
}

std::string to_string(const GradedMF& m) {
  std::string out = "M(n=" + std::to_string(m.n) + ", a=" + std::to_string(m.a) +
                    ", s=" + std::to_string(m.s) + ")";
  if (m.shift != 0) out += "[" + std::to_string(m.shift) + "]";
  return out;
}

Factorization shift_factorization(const Factorization& f, int j) {
  Factorization out = f;
  for (; j > 0; --j)
    out = Factorization{out.n,  out.w1,     out.w0 - out.n, out.e1,
                        out.e0, -out.sign1, -out.sign0};
  for (; j < 0; ++j)
    out = Factorization{out.n,  out.w1 + out.n, out.w0,    out.e1,
                        out.e0, -out.sign1,     -out.sign0};
  return out;
}

Factorization realize(const GradedMF& m) {
  Factorization base{m.n, m.s, m.s - m.a, m.a, m.n - m.a, 1, 1};
  return shift_factorization(base, m.shift);
}

}  // namespace fermat
