#include "fermat/orbit/tensor_orbit.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "fermat/exact/linalg.hpp"

namespace fermat {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

DegreeTable tensor_hom(const TranslateTable& per_factor, std::span<const int> source,
                       std::span<const int> target) {
  if (source.size() != target.size()) throw std::invalid_argument("tensor_hom: tuple lengths differ");
  DegreeTable acc{{0, Integer(1)}};
  for (std::size_t i = 0; i < source.size(); ++i) {
    acc = convolve(acc, per_factor.at(source[i] - target[i]));
    if (acc.empty()) break;
  }
  return acc;
}

OrbitHomTable::OrbitHomTable(int n, std::vector<DegreeTable> by_offset)
    : n_(n), by_offset_(std::move(by_offset)) {
  if (static_cast<int>(by_offset_.size()) != n_)
    throw std::invalid_argument("OrbitHomTable: need one table per offset class");
}

const DegreeTable& OrbitHomTable::offset(int residue) const { return by_offset_[mod(residue, n_)]; }

DegreeTable OrbitHomTable::at_offset(int off) const {
  const int k = floor_div(off, n_);
  return by_offset_[off - k * n_].shifted(-2 * k);
}

OrbitHomTable orbit_hom_table(int n, int representative_periods) {
  if (n < 2) throw std::invalid_argument("orbit_hom_table: n must be >= 2");
  if (representative_periods < 1) throw std::invalid_argument("orbit_hom_table: periods must be >= 1");
  const TranslateTable per_factor = per_factor_table(n);

  // Per-factor generating polynomial in (offset, degree) over the window.
  std::vector<std::pair<int, DegreeTable>> factor;
  for (int delta = 0; delta < n * representative_periods; ++delta) {
    DegreeTable t = per_factor.at(delta);
    if (!t.empty()) factor.emplace_back(delta, std::move(t));
  }

  // n-th power by repeated convolution; key (offset sum, degree).
  std::map<std::pair<int, int>, Integer> power{{{0, 0}, Integer(1)}};
  for (int i = 0; i < n; ++i) {
    std::map<std::pair<int, int>, Integer> next;
    for (const auto& [key, count] : power)
      for (const auto& [delta, t] : factor)
        for (const auto& [d, dim] : t.entries()) next[{key.first + delta, key.second + d}] += count * dim;
    power = std::move(next);
  }

  std::map<std::pair<int, int>, Integer> adjusted;
  for (const auto& [key, count] : power) {
    const auto [sum, degree] = key;
    const int k = sum / n;  // sum >= 0
    adjusted[{sum % n, degree + 2 * k}] += count;
  }

  // Each offset class has representative_periods^n lifts in the window.
  const Integer lifts = ipow(Integer(representative_periods), static_cast<unsigned long>(n));
  std::vector<DegreeTable> by_offset(n);
  for (const auto& [key, count] : adjusted) {
    if (count % lifts != 0)
      throw std::logic_error("orbit_hom_table: lifts of an offset class disagree at offset " +
                             std::to_string(key.first));
    by_offset[key.first].add(key.second, count / lifts);
  }
  return OrbitHomTable(n, std::move(by_offset));
}

const OrbitHomTable& cached_orbit_table(int n) {
  static std::mutex guard;
  static std::map<int, std::unique_ptr<OrbitHomTable>> memo;
  std::lock_guard lock(guard);
  auto& slot = memo[n];
  if (!slot) slot = std::make_unique<OrbitHomTable>(orbit_hom_table(n));
  return *slot;
}

Integer euler_pairing(int n, int s, int s_prime, PairingNormalization normalization) {
  Integer chi = cached_orbit_table(n).pair(s, s_prime).euler();
  if (normalization == PairingNormalization::shifted && mod(s_prime - s, 2) == 1) chi = -chi;
  return chi;
}

std::vector<Integer> gram_circulant(int n, PairingNormalization normalization) {
  if (n < 2) throw std::invalid_argument("gram_circulant: n must be >= 2");
  std::vector<Integer> row;
  for (int delta = 0; delta < n; ++delta) row.push_back(euler_pairing(n, 0, delta, normalization));
  return row;
}

std::vector<std::vector<Integer>> per_factor_euler_form(int n) {
  const TranslateTable t = per_factor_table(n);
  std::vector<std::vector<Integer>> g(n, std::vector<Integer>(n));
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) g[mu][nu] = t.at(mu - nu).euler();
  return g;
}

Integer k_rank(int n) {
  if (n < 2) throw std::invalid_argument("k_rank: n must be >= 2");
  const auto g = per_factor_euler_form(n);
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(g[i][j]);
  // rank(A (x) B) = rank A * rank B.
  return ipow(Integer(static_cast<unsigned long>(rank(m))), static_cast<unsigned long>(n));
}

}  // namespace fermat
