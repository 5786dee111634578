#include "fermat/orbifold/poincare.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace fermat {

namespace {

Integer factorial(long k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

void require_n(int n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": n must be >= 2");
}

}  // namespace

Integer SectorDecomposition::total_classes() const {
  Integer t = 0;
  for (const auto& s : sectors) t += s.class_count;
  return t;
}

IntPoly projective_poincare(int m) {
  if (m < 0) return {};
  return IntPoly(std::vector<Integer>(m + 1, Integer(1)));
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Integer set_partition_count(const std::vector<int>& blocks) {
  long n = 0;
  std::map<int, long> multiplicity;
  for (int b : blocks) {
    n += b;
    ++multiplicity[b];
  }
  Integer den = 1;
  for (const auto& [b, m] : multiplicity) den *= ipow(factorial(b), m) * factorial(m);
  return factorial(n) / den;
}

SectorDecomposition sector_decomposition(int n) {
  require_n(n, "sector_decomposition");
  SectorDecomposition out;
  out.n = n;
  for (const auto& blocks : integer_partitions(n)) {
    const int r = static_cast<int>(blocks.size());
    // Distinct values mod n on r blocks, up to the diagonal: (n-1)(n-2)...(n-r+1).
    Integer colorings = 1;
    for (int i = 1; i < r; ++i) colorings *= (n - i);
    const Integer count = set_partition_count(blocks) * colorings;
    IntPoly per_class;
    for (int b : blocks)
      if (b >= 2) per_class += projective_poincare(b - 2);
    out.sectors.push_back(SectorClass{blocks, count, per_class * count});
  }
  return out;
}

IntPoly poincare(int n) {
  IntPoly total;
  for (const auto& s : sector_decomposition(n).sectors) total += s.contribution;
  return total;
}

IntPoly poincare_literal(int n) {
  require_n(n, "poincare_literal");
  IntPoly total;
  for (int j = 2; j <= n; ++j) {
    const Integer weight = ipow(Integer(n), static_cast<unsigned long>(n - j)) * binomial(n, j);
    for (int k = 2; k <= j; ++k) {
      const Integer sign = ((j - k) % 2 == 0) ? 1 : -1;
      total += projective_poincare(k - 2) * Integer(weight * sign);
    }
  }
  return total;
}

LiteralComparison compare_literal(int n) {
  LiteralComparison c;
  c.n = n;
  c.sector_sum = poincare(n);
  c.literal = poincare_literal(n);
  c.matches = c.sector_sum == c.literal;
  return c;
}

Integer euler_char(int n) { return poincare(n).eval(Integer(1)); }

}  // namespace fermat
