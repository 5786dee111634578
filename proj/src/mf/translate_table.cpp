#include "fermat/mf/translate_table.hpp"

#include <stdexcept>

#include "fermat/mf/morphisms.hpp"

namespace fermat {

TranslateTable::TranslateTable(int n, std::map<int, DegreeTable> base)
    : n_(n), base_(std::move(base)) {
  for (const auto& [delta, t] : base_)
    if (delta <= -n_ || delta > 0) throw std::invalid_argument("TranslateTable: offset outside window");
}

DegreeTable TranslateTable::at(int delta) const {
  // delta = base + n k with -n < base <= 0.
  int k = delta / n_;
  if (delta - k * n_ > 0) ++k;
  if (delta - k * n_ <= -n_) --k;
  const int window = delta - k * n_;
  auto it = base_.find(window);
  if (it == base_.end()) return {};
  return it->second.shifted(wrap_degree_step * k);
}

std::string TranslateTable::to_string() const {
  std::string out;
  for (const auto& [delta, t] : base_)
    for (const auto& [d, v] : t.entries())
      out += "(" + std::to_string(delta) + "," + std::to_string(d) + "):" + v.get_str() + " ";
  if (!out.empty()) out.pop_back();
  return out;
}

TranslateTable per_factor_table(int n) {
  if (n < 2) throw std::invalid_argument("per_factor_table: n must be >= 2");
  const GradedMF e = mf_base(n);
  std::map<int, DegreeTable> base;
  for (int delta = -n + 1; delta <= 0; ++delta) {
    // tau^{-delta} = twist(delta).
    DegreeTable t = mf_hom_table(e, mf_twist(e, delta));
    if (!t.empty()) base.emplace(delta, std::move(t));
  }
  return TranslateTable(n, std::move(base));
}

PeriodicityReport verify_periodicity(int n, int twist_power, int shift) {
  PeriodicityReport report;
  report.n = n;
  report.twist_power = twist_power;
  report.shift = shift;
  std::vector<GradedMF> window;
  for (int a = 1; a < n; ++a)
    for (int s = 0; s < n; ++s) window.push_back(mf_make(n, a, s));
  for (const auto& m : window) {
    ++report.objects_checked;
    const GradedMF lhs = mf_twist(m, twist_power);
    const GradedMF rhs = mf_shift(m, shift);
    if (!isomorphic(lhs, rhs)) {
      report.violations.push_back("normal form: " + to_string(lhs) + " vs " + to_string(rhs));
      continue;
    }
    for (const auto& probe : window) {
      if (!(mf_hom_table(probe, lhs) == mf_hom_table(probe, rhs)) ||
          !(mf_hom_table(lhs, probe) == mf_hom_table(rhs, probe))) {
        report.violations.push_back("hom table: " + to_string(m) + " against " + to_string(probe));
        break;
      }
    }
  }
  return report;
}

}  // namespace fermat
