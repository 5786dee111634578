#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fermat/exact/arith.hpp"
#include "fermat/stability/collection.hpp"

namespace fermat {

// Vertices are the objects of a segment; arrows[(i, j, d)] is the number of
// degree-d arrows from vertex i to vertex j (i == j for loops).
struct GradedQuiver {
  std::vector<std::string> vertices;
  std::map<std::tuple<std::size_t, std::size_t, int>, Integer> arrows;

  Integer count(std::size_t from, std::size_t to, int degree) const;
  /// Multiset of (degree, multiplicity) over arrows between distinct vertices.
  std::vector<std::pair<int, Integer>> between_distinct() const;
  /// Adjacency list "src -> dst [deg d] x m", one arrow class per line.
  std::string to_string() const;
};

/// Quiver of consecutive stable objects c[first .. first + count - 1],
/// 1 <= count <= 3. Arrows between distinct vertices carry dim Hom^d, loops
/// the self-Ext dimensions in degree >= 1. Throws std::out_of_range.
GradedQuiver heart_quiver(const StableCollection& c, std::size_t first, std::size_t count);

}  // namespace fermat
