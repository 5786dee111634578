#include "fermat/verify/oracles.hpp"

#include <map>
#include <stdexcept>

#include "fermat/mf/graded_mf.hpp"
#include "fermat/mf/morphisms.hpp"
#include "fermat/orbifold/poincare.hpp"

namespace fermat::oracle {

DegreeTable bott(int N, int q, int t) {
  if (q < 0 || q > N) throw std::invalid_argument("bott: q out of range");
  DegreeTable out;
  if (t == 0) {
    out.add(q, Integer(1));
    return out;
  }
  if (t > q) out.add(0, binomial(t + N - q, t) * binomial(t - 1, q));
  if (-t > N - q) out.add(N, binomial(-t + q, -t) * binomial(-t - 1, N - q));
  return out;
}

DegreeTable restricted_bott(int n, int q, int t) {
  const int N = n - 1;
  const DegreeTable a = bott(N, q, t - n);
  const DegreeTable b = bott(N, q, t);
  if (q == 0 && N >= 2) {
    // Multiplication by F is injective on H^0 and, dually, surjective on H^N.
    DegreeTable out;
    if (b.at(0) - a.at(0) != 0) out.add(0, b.at(0) - a.at(0));
    if (a.at(N) - b.at(N) != 0) out.add(N - 1, a.at(N) - b.at(N));
    return out;
  }
  for (const auto& [i, v] : a.entries())
    if (b.at(i) != 0) throw std::domain_error("restricted_bott: connecting maps undetermined");
  DegreeTable out;
  for (const auto& [i, v] : b.entries()) out.add(i, v);
  for (const auto& [i, v] : a.entries()) out.add(i - 1, v);
  return out;
}

DegreeTable sheaf_orbit_table(int n, int offset) {
  if (offset < 0 || offset >= n) throw std::invalid_argument("sheaf_orbit_table: offset outside [0, n)");
  if (n == 2) {
    // X_2 is two points; only the structure sheaf class is needed.
    if (offset != 0) throw std::domain_error("sheaf_orbit_table: n = 2 has no Bott description");
    return DegreeTable{{0, Integer(2)}};
  }
  return restricted_bott(n, offset, offset).shifted(-offset);
}

Integer sheaf_euler_line_bundle(int n, int t) { return restricted_bott(n, 0, t).euler(); }

std::vector<DegreeTable> brute_force_orbit_tables(int n) {
  const GradedMF e = mf_base(n);
  std::vector<DegreeTable> factor(n);
  for (int delta = 0; delta < n; ++delta) factor[delta] = mf_hom_table(e, mf_twist(e, delta));
  std::vector<DegreeTable> out(n);
  std::vector<int> tuple(n, 0);
  while (true) {
    int sum = 0;
    DegreeTable acc{{0, Integer(1)}};
    for (int i = 0; i < n; ++i) {
      sum += tuple[i];
      acc = convolve(acc, factor[tuple[i]]);
    }
    for (const auto& [d, v] : acc.entries()) out[sum % n].add(d + 2 * (sum / n), v);
    int pos = 0;
    while (pos < n && ++tuple[pos] == n) tuple[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

IntPoly brute_force_poincare(int n, Integer* classes_seen) {
  IntPoly total;
  Integer seen = 0;
  std::vector<int> g(n, 0);  // g[n-1] = 0 fixes the diagonal
  while (true) {
    ++seen;
    std::map<int, int> block_sizes;
    for (int v : g) ++block_sizes[v];
    for (const auto& [value, size] : block_sizes)
      if (size >= 2) total += projective_poincare(size - 2);
    int pos = 0;
    while (pos < n - 1 && ++g[pos] == n) g[pos++] = 0;
    if (pos == n - 1) break;
  }
  if (classes_seen) *classes_seen = seen;
  return total;
}

BiSeries mercator_log(const BiSeries& f) {
  const int xt = f.xtrunc();
  BiSeries u = f;
  u[0] = HalfSeries(f[0].trunc());  // f - 1
  BiSeries power = u;
  BiSeries acc = u;
  for (int k = 2; k <= xt; ++k) {
    power = power * u;
    const Rational c = make_rational((k % 2 == 0) ? -1 : 1, k);
    std::vector<HalfSeries> scaled;
    for (const auto& s : power.coeffs()) scaled.push_back(s * c);
    acc = acc + BiSeries(std::move(scaled));
  }
  return acc;
}

std::vector<Rational> dilog_coefficient_by_expansion(int m, int wN) {
  // Coefficients in q of prod_j 1/(1 - q^j) = prod_j sum_r q^{jr}.
  const int qN = wN / 2 + 1;
  std::vector<Rational> series(qN + 1);
  series[0] = 1;
  for (int j = 1; j <= m; ++j) {
    std::vector<Rational> next(qN + 1);
    for (int e = 0; e <= qN; ++e) {
      if (series[e] == 0) continue;
      for (int add = 0; e + add <= qN; add += j) next[e + add] += series[e];
    }
    series = std::move(next);
  }
  std::vector<Rational> out(wN + 1);
  for (int e = 0; e <= qN; ++e)
    if (m + 2 * e <= wN) out[m + 2 * e] = series[e];
  return out;
}

}  // namespace fermat::oracle
