#include "fermat/stability/quiver.hpp"

#include <stdexcept>

namespace fermat {

Integer GradedQuiver::count(std::size_t from, std::size_t to, int degree) const {
  auto it = arrows.find({from, to, degree});
  return it == arrows.end() ? Integer(0) : it->second;
}

std::vector<std::pair<int, Integer>> GradedQuiver::between_distinct() const {
  std::map<int, Integer> by_degree;
  for (const auto& [key, m] : arrows)
    if (std::get<0>(key) != std::get<1>(key)) by_degree[std::get<2>(key)] += m;
  return {by_degree.begin(), by_degree.end()};
}

std::string GradedQuiver::to_string() const {
  std::string out;
  for (const auto& [key, m] : arrows) {
    const auto& [i, j, d] = key;
    out += vertices[i] + " -> " + vertices[j] + " [deg " + std::to_string(d) + "] x" + m.get_str() + "\n";
  }
  return out;
}

GradedQuiver heart_quiver(const StableCollection& c, std::size_t first, std::size_t count) {
  if (count < 1 || count > 3) throw std::out_of_range("heart_quiver: segment length must be 1..3");
  if (first + count > c.size()) throw std::out_of_range("heart_quiver: segment outside the collection");
  GradedQuiver q;
  for (std::size_t i = 0; i < count; ++i) q.vertices.push_back(label(c.kind(), c[first + i]));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const DegreeTable h = object_hom(c.kind(), c.n(), c[first + i], c[first + j]);
      for (const auto& [d, dim] : h.entries()) {
        if (i == j && d < 1) continue;
        q.arrows[{i, j, d}] = dim;
      }
    }
  return q;
}

}  // namespace fermat
