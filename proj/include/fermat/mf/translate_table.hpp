#pragma once

#include <map>
#include <string>
#include <vector>

#include "fermat/mf/degree_table.hpp"
#include "fermat/mf/graded_mf.hpp"

namespace fermat {

// T(delta, d) = dim Hom^d(E, tau^{-delta} E) for the Auslander-Reiten
// translate tau = twist(-1) of graded factorizations of x^n.
//
// Only the fundamental window -n < delta <= 0 is stored. Since
// tau^{-n} = twist(n) = [2], the entry at (delta, d) reappears at
// (delta + n, d - 2).
class TranslateTable {
 public:
  TranslateTable(int n, std::map<int, DegreeTable> base);

  int n() const { return n_; }
  /// Degree step of the wrap per +n in delta.
  static constexpr int wrap_degree_step = -2;

  const std::map<int, DegreeTable>& base() const { return base_; }
  DegreeTable at(int delta) const;
  Integer at(int delta, int degree) const { return at(delta).at(degree); }

  std::string to_string() const;

 private:
  int n_;
  std::map<int, DegreeTable> base_;
};

/// Computed from morphism-complex cohomology over the fundamental window.
TranslateTable per_factor_table(int n);

struct PeriodicityReport {
  int n = 0;
  int twist_power = 0;
  int shift = 0;
  int objects_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks twist(M, twist_power) ~ M[shift] for every indecomposable M(a, s),
/// 1 <= a < n, 0 <= s < n: by normal forms and by Hom tables against every
/// object of the same window (from both sides).
PeriodicityReport verify_periodicity(int n, int twist_power, int shift);

/// The default check twist(n) ~ [2].
inline PeriodicityReport verify_periodicity(int n) { return verify_periodicity(n, n, 2); }

}  // namespace fermat
