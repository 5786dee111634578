#include <doctest.h>

#include <stdexcept>

#include "fermat/orbifold/poincare.hpp"
#include "fermat/verify/oracles.hpp"

using namespace fermat;

TEST_CASE("known values") {
  CHECK(poincare(2).to_string() == "1");
  CHECK(poincare(3).to_string() == "q+7");
  CHECK(poincare(4).to_string() == "q^2+13q+67");
  CHECK(poincare(5).to_string() == "q^3+21q^2+181q+821");
  CHECK_THROWS_AS(poincare(1), std::invalid_argument);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_char(3) == 8);
  CHECK(euler_char(5) == 1024);
  CHECK(euler_char(10) == Integer("3486784401"));
  for (int n = 2; n <= 16; ++n) CHECK(euler_char(n) == ipow(Integer(n - 1), n));
}

TEST_CASE("shape of the polynomial") {
  for (int n = 3; n <= 14; ++n) {
    const IntPoly p = poincare(n);
    CHECK(p.degree() == n - 2);
    for (const auto& c : p.coeffs()) CHECK(c > 0);
    CHECK(p.coeff(n - 2) == 1);
  }
  CHECK(poincare(2).degree() == 0);
}

TEST_CASE("class counts") {
  for (int n = 2; n <= 25; ++n) {
    const SectorDecomposition d = sector_decomposition(n);
    CHECK(d.total_classes() == ipow(Integer(n), n - 1));
    for (const auto& s : d.sectors)
      for (const auto& c : s.contribution.coeffs()) CHECK(c >= 0);
  }
  CHECK(integer_partitions(4).size() == 5);
  CHECK(integer_partitions(10).size() == 42);
  CHECK(set_partition_count({2, 2}) == 3);
  CHECK(set_partition_count({3, 1}) == 4);
  CHECK(set_partition_count({1, 1, 1, 1}) == 1);
}

TEST_CASE("sector sum agrees with the per-class loop") {
  for (int n = 2; n <= 6; ++n) {
    Integer seen = 0;
    CHECK(oracle::brute_force_poincare(n, &seen) == poincare(n));
    CHECK(seen == ipow(Integer(n), n - 1));
  }
}

TEST_CASE("literal formula diagnostic") {
  CHECK(poincare_literal(2).to_string() == "1");
  CHECK(compare_literal(2).matches);
  CHECK(poincare_literal(3).to_string() == "q+9");
  for (int n = 3; n <= 6; ++n) {
    const LiteralComparison c = compare_literal(n);
    CHECK_FALSE(c.matches);
    CHECK(c.sector_sum == poincare(n));
    CHECK(c.literal == poincare_literal(n));
  }
  CHECK(projective_poincare(2).to_string() == "q^2+q+1");
}
