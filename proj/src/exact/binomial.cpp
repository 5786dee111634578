#include "fermat/exact/poly.hpp"

namespace fermat {

RatPoly poly_binomial(int t_shift, int choose) {
  if (choose < 0) throw std::invalid_argument("poly_binomial: choose must be >= 0");
  RatPoly acc = RatPoly::constant(1);
  for (int i = 0; i < choose; ++i) {
    // factor (t + t_shift - i) / (i + 1)
    RatPoly factor(std::vector<Rational>{make_rational(t_shift - i, i + 1), make_rational(1, i + 1)});
    acc = acc * factor;
  }
  return acc;
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace fermat
