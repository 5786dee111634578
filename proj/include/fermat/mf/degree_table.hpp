#pragma once

#include <map>
#include <string>
#include <utility>

#include "fermat/exact/arith.hpp"

namespace fermat {

// Finitely supported map: cohomological degree -> dimension. Optionally
// refined by an internal weight; the refinement always sums to the
// degree marginal because both are updated together.
class DegreeTable {
 public:
  using Entries = std::map<int, Integer>;
  using Refined = std::map<std::pair<int, int>, Integer>;

  DegreeTable() = default;
  DegreeTable(std::initializer_list<std::pair<const int, Integer>> entries);

  void add(int degree, const Integer& dim);
  void add(int degree, int weight, const Integer& dim);

  Integer at(int degree) const;
  const Entries& entries() const { return entries_; }
  const Refined& refined() const { return refined_; }
  bool has_refinement() const { return !refined_.empty(); }

  bool empty() const { return entries_.empty(); }
  Integer total() const;
  /// Alternating sum of dimensions.
  Integer euler() const;
  int min_degree() const;
  int max_degree() const;

  /// Entry at degree d moves to degree d + by.
  DegreeTable shifted(int by) const;

  /// Degree-wise convolution: dimensions multiply, degrees add.
  friend DegreeTable convolve(const DegreeTable& a, const DegreeTable& b);

  /// Compares the degree marginals only.
  friend bool operator==(const DegreeTable& a, const DegreeTable& b) {
    return a.entries_ == b.entries_;
  }

  /// "{0:1, 3:1}"
  std::string to_string() const;

 private:
  Entries entries_;
  Refined refined_;
};

}  // namespace fermat
