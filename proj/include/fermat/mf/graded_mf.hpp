#pragma once

#include <compare>
#include <string>

namespace fermat {

// Rank-one graded matrix factorization of x^n over k[x], deg x = 1.
//
// The object M(a, s)[shift]: free modules P0 = R e0 with e0 in weight s,
// P1 = R e1 with e1 in weight s - a, and maps
//   p0 = x^a     : P0 -> P1,
//   p1 = x^(n-a) : P1 -> P0(n),
// so p1 p0 = x^n. The shift [1] sends (P0, P1, p0, p1) to
// (P1, P0(n), -p1, -p0(n)), hence M(a, s)[1] = M(n - a, s - a) and
// M(a, s)[2] = M(a, s - n). The twist is twist(k): s -> s - k, so that
// twist(n) = [2].
struct GradedMF {
  int n = 2;
  int a = 1;
  int s = 0;
  int shift = 0;
};

/// Throws std::invalid_argument unless n >= 2 and 1 <= a <= n - 1.
GradedMF mf_make(int n, int a, int s);

/// The object E := mf_make(n, 1, 0).
GradedMF mf_base(int n);

GradedMF mf_twist(const GradedMF& m, int k);
GradedMF mf_shift(const GradedMF& m, int j);

// Unique representative of the isomorphism class: M(a, s)[shift] with
// 0 <= s < n and shift even.
struct MFNormalForm {
  int n;
  int a;
  int s;
  int shift;
  auto operator<=>(const MFNormalForm&) const = default;
};

MFNormalForm normal_form(const GradedMF& m);
bool isomorphic(const GradedMF& x, const GradedMF& y);

std::string to_string(const GradedMF& m);

// Concrete two-periodic complex realizing a GradedMF, with signs.
struct Factorization {
  int n;
  int w0;  // weight of the generator of P0
  int w1;  // weight of the generator of P1
  int e0;  // p0 = sign0 * x^e0 : P0 -> P1
  int e1;  // p1 = sign1 * x^e1 : P1 -> P0(n)
  int sign0;
  int sign1;
  bool operator==(const Factorization&) const = default;
};

Factorization realize(const GradedMF& m);
Factorization shift_factorization(const Factorization& f, int j);

}  // namespace fermat
