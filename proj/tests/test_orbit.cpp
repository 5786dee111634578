#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "fermat/exact/linalg.hpp"
#include "fermat/exact/poly.hpp"
#include "fermat/orbit/tensor_orbit.hpp"
#include "fermat/verify/oracles.hpp"

using namespace fermat;

namespace {

DegreeTable single(int d, long dim) { return DegreeTable{{d, Integer(dim)}}; }

}  // namespace

TEST_CASE("tensor hom examples") {
  const TranslateTable t = per_factor_table(3);
  const std::vector<int> zero{0, 0, 0}, ones{1, 1, 1}, first{1, 0, 0};
  CHECK(tensor_hom(t, zero, ones) == single(3, 1));
  CHECK(tensor_hom(t, zero, first) == single(1, 1));
  CHECK(tensor_hom(t, ones, ones) == single(0, 1));
  CHECK(tensor_hom(t, first, first) == single(0, 1));
}

TEST_CASE("orbit table examples") {
  const OrbitHomTable t3 = orbit_hom_table(3);
  CHECK(t3.offset(0) == (DegreeTable{{0, Integer(1)}, {1, Integer(1)}}));
  CHECK(t3.offset(1) == single(0, 3));
  const OrbitHomTable t5 = orbit_hom_table(5);
  CHECK(t5.offset(0) == (DegreeTable{{0, Integer(1)}, {3, Integer(1)}}));
  CHECK(t5.offset(1) == single(2, 5));
  CHECK(orbit_hom_table(2).offset(0) == single(0, 2));
  CHECK_THROWS_AS(orbit_hom_table(1), std::invalid_argument);
}

TEST_CASE("closed form of the orbit tables") {
  for (int n = 2; n <= 9; ++n) {
    const OrbitHomTable& t = cached_orbit_table(n);
    DegreeTable zero;
    zero.add(0, Integer(1));
    zero.add(n - 2, Integer(1));
    CHECK(t.offset(0) == zero);
    for (int delta = 1; delta < n; ++delta) CHECK(t.offset(delta) == single(n - 2 - delta, binomial(n, delta).get_si()));
  }
}

TEST_CASE("convolution agrees with the literal tuple loop") {
  for (int n = 2; n <= 5; ++n) {
    const auto brute = oracle::brute_force_orbit_tables(n);
    const OrbitHomTable t = orbit_hom_table(n);
    for (int delta = 0; delta < n; ++delta) CHECK(brute[delta] == t.offset(delta));
  }
}

TEST_CASE("orbit tables agree with the sheaf oracle") {
  for (int n = 3; n <= 6; ++n) {
    const OrbitHomTable t = orbit_hom_table(n);
    for (int delta = 0; delta < n; ++delta) {
      INFO("n=" << n << " offset=" << delta);
      CHECK(t.offset(delta) == oracle::sheaf_orbit_table(n, delta));
    }
  }
}

TEST_CASE("cyclic invariance and wrap consistency") {
  const OrbitHomTable t = orbit_hom_table(4);
  for (int s = 0; s < 4; ++s)
    for (int sp = 0; sp < 4; ++sp) CHECK(t.pair(s, sp) == t.offset(sp - s));
  for (int mu = -8; mu <= 8; ++mu) {
    CHECK(t.at_offset(mu + 4) == t.at_offset(mu).shifted(-2));
    CHECK(t.hom(mu, 0) == t.at_offset(mu));
  }
}

TEST_CASE("Serre duality on integer offsets") {
  for (int n = 3; n <= 7; ++n) {
    const OrbitHomTable t = orbit_hom_table(n);
    for (int delta = -n; delta <= 2 * n; ++delta) {
      const DegreeTable forward = t.at_offset(delta), backward = t.at_offset(-delta);
      for (int d = -3 * n; d <= 3 * n; ++d) CHECK(forward.at(d) == backward.at(n - 2 - d));
    }
  }
}

TEST_CASE("representative window independence") {
  for (int n = 2; n <= 5; ++n) {
    const OrbitHomTable a = orbit_hom_table(n, 1), b = orbit_hom_table(n, 2), c = orbit_hom_table(n, 3);
    for (int delta = 0; delta < n; ++delta) {
      CHECK(a.offset(delta) == b.offset(delta));
      CHECK(a.offset(delta) == c.offset(delta));
    }
  }
}

TEST_CASE("euler pairings") {
  CHECK(euler_pairing(5, 0, 1) == 5);
  CHECK(euler_pairing(3, 0, 0) == 0);
  CHECK(euler_pairing(5, 0, 2) == -10);
  CHECK(euler_pairing(5, 0, 1, PairingNormalization::shifted) == -5);
  CHECK(gram_circulant(5) == std::vector<Integer>{0, 5, -10, 10, -5});
  CHECK(gram_circulant(3) == std::vector<Integer>{0, 3, -3});
  // K3: chi(O, O) = 2, not 0.
  CHECK(gram_circulant(4) == std::vector<Integer>{2, -4, 6, -4});
  for (int n = 2; n <= 9; ++n) {
    const auto row = gram_circulant(n);
    CHECK(row[0] == (n % 2 == 0 ? 2 : 0));
    for (int delta = 1; delta < n; ++delta) {
      const Integer sign = (n - delta) % 2 == 0 ? 1 : -1;
      CHECK(row[delta] == sign * binomial(n, delta));
      CHECK(row[delta] == ((n % 2 == 0) ? row[n - delta] : Integer(-row[n - delta])));
    }
  }
}

TEST_CASE("HRR cross-check of the offset-one pairing") {
  // chi(t^-1 O, O) on X_n equals chi(O_X(1)) up to the sign (-1)^(n-1).
  for (int n = 3; n <= 7; ++n) {
    const Integer sign = (n - 1) % 2 == 0 ? 1 : -1;
    CHECK(euler_pairing(n, 0, 1) == sign * oracle::sheaf_euler_line_bundle(n, 1));
  }
}

TEST_CASE("k_rank") {
  CHECK(k_rank(2) == 1);
  CHECK(k_rank(3) == 8);
  CHECK(k_rank(5) == 1024);
  for (int n = 2; n <= 8; ++n) CHECK(k_rank(n) == ipow(Integer(n - 1), n));
}

TEST_CASE("k_rank against an explicit Kronecker power") {
  for (int n = 2; n <= 4; ++n) {
    const auto g = per_factor_euler_form(n);
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(g[i][j]);
    RationalMatrix power = m;
    for (int i = 1; i < n; ++i) power = kronecker(power, m);
    CHECK(Integer(static_cast<unsigned long>(rank(power))) == k_rank(n));
  }
}
