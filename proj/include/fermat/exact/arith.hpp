#pragma once

#include <string>

#include <gmpxx.h>

namespace fermat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Canonical p/q.
Rational make_rational(long p, long q);

/// Integer power with exact result.
Integer ipow(const Integer& base, unsigned long exponent);

}  // namespace fermat
