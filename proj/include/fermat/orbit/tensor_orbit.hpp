#pragma once

#include <span>
#include <string>
#include <vector>

#include "fermat/exact/arith.hpp"
#include "fermat/mf/degree_table.hpp"
#include "fermat/mf/translate_table.hpp"

namespace fermat {

// Objects of the n-fold tensor category are tuples (mu_1, ..., mu_n)
// standing for the product of tau~^{-mu_i} E. Hom between two tuples is the
// Kuenneth convolution of the per-factor tables at offsets mu_i - mu'_i.
DegreeTable tensor_hom(const TranslateTable& per_factor, std::span<const int> source,
                       std::span<const int> target);

// Hom tables of the orbit category, one per offset class.
//
// offset(D) = Hom^*(tau~^{-D} O, O) for 0 <= D < n, the sum over offset
// tuples in [0, n)^n with sum D + n k, each contribution placed at its
// convolved degree + 2k. Equivalently Hom(object mu, object mu') depends on
// mu - mu' only; at_offset() evaluates it at any integer offset, moving
// entries by -2 per +n.
class OrbitHomTable {
 public:
  OrbitHomTable(int n, std::vector<DegreeTable> by_offset);

  int n() const { return n_; }
  const std::vector<DegreeTable>& by_offset() const { return by_offset_; }
  /// Table for an offset class, residue taken mod n.
  const DegreeTable& offset(int residue) const;
  /// Table at an actual integer offset, wrap-consistent.
  DegreeTable at_offset(int offset) const;
  /// Table for the ordered pair of Omega summands (s, s'), offset class s' - s.
  const DegreeTable& pair(int s, int s_prime) const { return offset(s_prime - s); }
  /// Hom^*(tau~^{-mu} O, tau~^{-mu'} O).
  DegreeTable hom(int mu, int mu_prime) const { return at_offset(mu - mu_prime); }

 private:
  int n_;
  std::vector<DegreeTable> by_offset_;
};

/// representative_periods = p sums over tuples in [0, p n)^n and divides by
/// the p^n lifts of each offset class; the result is independent of p.
OrbitHomTable orbit_hom_table(int n, int representative_periods = 1);

/// Shared read-only memo of orbit_hom_table(n).
const OrbitHomTable& cached_orbit_table(int n);

enum class PairingNormalization { raw, shifted };

/// chi between Omega summands s and s' (offset class s' - s). The shifted
/// normalization multiplies by (-1)^(s' - s).
Integer euler_pairing(int n, int s, int s_prime,
                      PairingNormalization normalization = PairingNormalization::raw);

/// (chi(D))_{D = 0..n-1}.
std::vector<Integer> gram_circulant(int n,
                                    PairingNormalization normalization = PairingNormalization::raw);

/// Euler form of one factor on tau^{-mu} E, 0 <= mu < n.
std::vector<std::vector<Integer>> per_factor_euler_form(int n);

/// Rank of the n-th tensor power of the per-factor Euler lattice.
Integer k_rank(int n);

}  // namespace fermat
