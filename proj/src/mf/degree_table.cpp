#include "fermat/mf/degree_table.hpp"

#include <stdexcept>

namespace fermat {

DegreeTable::DegreeTable(std::initializer_list<std::pair<const int, Integer>> entries) {
  for (const auto& [d, v] : entries) add(d, v);
}

void DegreeTable::add(int degree, const Integer& dim) {
  if (dim < 0) throw std::invalid_argument("DegreeTable: negative dimension");
  if (dim == 0) return;
  entries_[degree] += dim;
}

void DegreeTable::add(int degree, int weight, const Integer& dim) {
  add(degree, dim);
  if (dim != 0) refined_[{degree, weight}] += dim;
}

Integer DegreeTable::at(int degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? Integer(0) : it->second;
}

Integer DegreeTable::total() const {
  Integer t = 0;
  for (const auto& [d, v] : entries_) t += v;
  return t;
}

Integer DegreeTable::euler() const {
  Integer t = 0;
  for (const auto& [d, v] : entries_) t += (d % 2 == 0) ? v : Integer(-v);
  return t;
}

int DegreeTable::min_degree() const {
  if (entries_.empty()) throw std::logic_error("DegreeTable::min_degree on empty table");
  return entries_.begin()->first;
}

int DegreeTable::max_degree() const {
  if (entries_.empty()) throw std::logic_error("DegreeTable::max_degree on empty table");
  return entries_.rbegin()->first;
}

DegreeTable DegreeTable::shifted(int by) const {
  DegreeTable out;
  for (const auto& [d, v] : entries_) out.entries_[d + by] = v;
  for (const auto& [key, v] : refined_) out.refined_[{key.first + by, key.second}] = v;
  return out;
}

DegreeTable convolve(const DegreeTable& a, const DegreeTable& b) {
  DegreeTable out;
  for (const auto& [da, va] : a.entries_)
    for (const auto& [db, vb] : b.entries_) out.add(da + db, va * vb);
  return out;
}

std::string DegreeTable::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [d, v] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(d) + ":" + v.get_str();
  }
  return out + "}";
}

}  // namespace fermat
