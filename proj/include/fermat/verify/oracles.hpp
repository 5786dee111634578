#pragma once

#include <vector>

#include "fermat/exact/arith.hpp"
#include "fermat/exact/bi_series.hpp"
#include "fermat/exact/poly.hpp"
#include "fermat/mf/degree_table.hpp"

// Independent reference computations. Nothing in the core library calls
// into this header.
namespace fermat::oracle {

/// h^*(P^N, Omega^q(t)) by Bott's formula.
DegreeTable bott(int N, int q, int t);

/// h^*(X_n, Omega^q_{P}(t)|_X) from the restriction sequence
/// 0 -> Omega^q(t - n) -> Omega^q(t) -> Omega^q(t)|_X -> 0. For q = 0 the
/// map is multiplication by F. Otherwise throws std::domain_error when the
/// long exact sequence does not determine the answer.
DegreeTable restricted_bott(int n, int q, int t);

/// Hom^*(tau~^{-D} O, O) on X_n for 0 <= D < n via
/// tau~^{-D} O = Omega^{n-1-D}(n-D)[-D]|_X, i.e. h^{d+D}(Omega^D(D)|_X).
DegreeTable sheaf_orbit_table(int n, int offset);

/// chi(O_X(t)) from restricted Bott cohomology.
Integer sheaf_euler_line_bundle(int n, int t);

/// Orbit table by a literal loop over all n^n offset tuples, each factor's
/// table taken straight from mf_hom_table (no generating polynomial).
std::vector<DegreeTable> brute_force_orbit_tables(int n);

/// P(Y_n, q) by looping over every group class (g_1..g_{n-1}, 0) of
/// (Z/n)^n / diagonal and summing P(P^{b-2}) over blocks of equal coordinates.
IntPoly brute_force_poincare(int n, Integer* classes_seen = nullptr);

/// log f by the literal Mercator sum sum_k (-1)^{k+1} (f-1)^k / k.
BiSeries mercator_log(const BiSeries& f);

/// x^m coefficient of the quantum dilogarithm by term-by-term geometric expansion
/// of 1 / prod_{j=1}^{m} (1 - q^j), times w^m.
std::vector<Rational> dilog_coefficient_by_expansion(int m, int wN);

}  // namespace fermat::oracle
