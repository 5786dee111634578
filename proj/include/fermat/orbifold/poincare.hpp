#pragma once

#include <vector>

#include "fermat/exact/arith.hpp"
#include "fermat/exact/poly.hpp"

namespace fermat {

// One aggregated family of twisted sectors of Y_n: all group classes whose
// coordinates fall into blocks of equal values with block sizes `blocks`.
struct SectorClass {
  std::vector<int> blocks;  // integer partition of n, non-increasing
  Integer class_count;      // group classes with this block pattern
  IntPoly contribution;     // class_count * sum over blocks b >= 2 of P(P^{b-2})
};

struct SectorDecomposition {
  int n = 0;
  std::vector<SectorClass> sectors;
  Integer total_classes() const;
};

/// 1 + q + ... + q^m.
IntPoly projective_poincare(int m);

/// Integer partitions of n, each non-increasing, in reverse lexicographic order.
std::vector<std::vector<int>> integer_partitions(int n);

/// n! / prod_b (b!)^{m_b} m_b!.
Integer set_partition_count(const std::vector<int>& blocks);

SectorDecomposition sector_decomposition(int n);

/// P(Y_n, q) by the twisted-sector sum. Throws std::invalid_argument for n < 2.
IntPoly poincare(int n);

/// The printed double sum over 2 <= j <= n, 2 <= k <= j of
/// n^{n-j} C(n,j) (-1)^{j-k} P(P^{k-2}), evaluated term by term.
IntPoly poincare_literal(int n);

struct LiteralComparison {
  int n = 0;
  IntPoly sector_sum;
  IntPoly literal;
  bool matches = false;
};

LiteralComparison compare_literal(int n);

/// poincare(n) at q = 1.
Integer euler_char(int n);

}  // namespace fermat
