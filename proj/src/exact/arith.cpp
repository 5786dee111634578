#include <stdexcept>

#include "fermat/exact/arith.hpp"

namespace fermat {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational make_rational(long p, long q) {
  if (q == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace fermat
