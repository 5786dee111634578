#include "fermat/verify/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "fermat/exact/arith.hpp"
#include "fermat/mf/translate_table.hpp"
#include "fermat/orbifold/poincare.hpp"
#include "fermat/orbit/tensor_orbit.hpp"
#include "fermat/qmodular/dilog.hpp"
#include "fermat/qmodular/eisenstein.hpp"
#include "fermat/stability/collection.hpp"
#include "fermat/stability/quiver.hpp"
#include "fermat/verify/oracles.hpp"

namespace fermat::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects sub-check failures for one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    if (ok()) return std::to_string(count_) + " checks";
    std::string out = std::to_string(failures_.size()) + "/" + std::to_string(count_) + " failed: ";
    for (std::size_t i = 0; i < failures_.size() && i < 4; ++i) out += (i ? "; " : "") + failures_[i];
    return out;
  }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

CriterionResult finish(int id, const std::string& name, const Checks& c, Clock::time_point start,
                       const std::string& extra = "") {
  return CriterionResult{id, name, c.ok(), c.summary() + (extra.empty() ? "" : ", " + extra), since(start)};
}

CriterionResult poincare_values() {
  const auto start = Clock::now();
  Checks c;
  const char* expected[] = {"1", "q+7", "q^2+13q+67", "q^3+21q^2+181q+821"};
  for (int n = 2; n <= 5; ++n) {
    const std::string got = poincare(n).to_string("q");
    c.expect(got == expected[n - 2], "n=" + std::to_string(n) + " gave " + got);
  }
  c.expect(since(start) < 1.0, "exceeded 1 s");
  return finish(1, "poincare-printed-values", c, start);
}

CriterionResult euler_closed_form() {
  const auto start = Clock::now();
  Checks c;
  double n12 = 0;
  for (int n = 2; n <= 12; ++n) {
    const auto t = Clock::now();
    const Integer chi = euler_char(n);
    if (n == 12) n12 = since(t);
    c.expect(chi == ipow(Integer(n - 1), n), "n=" + std::to_string(n) + " gave " + chi.get_str());
  }
  c.expect(n12 < 5.0, "n=12 took too long");
  char buf[64];
  std::snprintf(buf, sizeof buf, "n=12 in %.4fs", n12);
  return finish(2, "euler-characteristic-closed-form", c, start, buf);
}

CriterionResult dilog_jm() {
  const auto start = Clock::now();
  Checks c;
  const auto extracted = jm_extracted_all(30, 120);
  for (int m = 1; m <= 30; ++m)
    c.expect(extracted[m - 1] == jm(m, 120, JmMode::closed), "J_" + std::to_string(m) + " differs");
  return finish(3, "quantum-dilog-jm-closed-form", c, start);
}

CriterionResult generating_identity() {
  const auto start = Clock::now();
  Checks c;
  for (int k : {-3, -1, 1, 3, 5})
    c.expect(gen_function(k, 200) == gen_function_double_sum(k, 200), "k=" + std::to_string(k));
  return finish(4, "generating-function-identity", c, start);
}

CriterionResult quasimodular() {
  const auto start = Clock::now();
  Checks c;
  const HalfSeries residual = quasimodular_check(200);
  c.expect(residual.is_zero() && residual.trunc() == 200, "residual nonzero: " + residual.to_string());
  const HalfSeries control = quasimodular_negative_control(200);
  c.expect(control.coeff(2) != 0, "negative control vanished at w^2");
  c.expect(control.valuation() == 2, "negative control first deviates at w^" +
                                          std::to_string(control.valuation()));
  return finish(5, "quasimodular-identity", c, start);
}

CriterionResult mf_periodicity() {
  const auto start = Clock::now();
  Checks c;
  for (int n = 2; n <= 8; ++n) {
    const auto r = verify_periodicity(n);
    c.expect(r.ok() && r.objects_checked == (n - 1) * n, "n=" + std::to_string(n));
  }
  return finish(6, "mf-periodicity", c, start);
}

CriterionResult per_factor() {
  const auto start = Clock::now();
  Checks c;
  for (int n = 2; n <= 8; ++n) {
    const TranslateTable t = per_factor_table(n);
    const std::string tag = "n=" + std::to_string(n);
    c.expect(t.base().size() == 2, tag + " support size");
    c.expect(t.at(0) == DegreeTable{{0, Integer(1)}}, tag + " (0,0)");
    c.expect(t.at(-1) == DegreeTable{{1, Integer(1)}}, tag + " (-1,1)");
    for (int delta = -2 * n; delta <= 2 * n; ++delta) {
      const DegreeTable here = t.at(delta);
      for (const auto& [d, v] : here.entries())
        c.expect(t.at(delta + n, d - 2) == v, tag + " wrap at " + std::to_string(delta));
    }
  }
  return finish(7, "per-factor-tables", c, start);
}

CriterionResult orbit_calibration() {
  const auto start = Clock::now();
  Checks c;
  const OrbitHomTable t = orbit_hom_table(3);
  for (int s = 0; s < 3; ++s)
    for (int sp = 0; sp < 3; ++sp) {
      const int delta = ((sp - s) % 3 + 3) % 3;
      const DegreeTable oracle = oracle::sheaf_orbit_table(3, delta);
      const DegreeTable& got = t.pair(s, sp);
      const std::string tag = "(" + std::to_string(s) + "," + std::to_string(sp) + ")";
      c.expect(got == oracle, tag + " " + got.to_string() + " vs oracle " + oracle.to_string());
      if (delta == 0) {
        c.expect(got == DegreeTable({{0, Integer(1)}, {1, Integer(1)}}), tag + " End table");
      } else {
        c.expect(got.entries().size() == 1 && got.total() == 3, tag + " off-diagonal shape");
      }
    }
  return finish(8, "orbit-calibration-n3", c, start);
}

CriterionResult quintic() {
  const auto start = Clock::now();
  Checks c;
  const OrbitHomTable t = orbit_hom_table(5);
  c.expect(t.offset(0) == DegreeTable({{0, Integer(1)}, {3, Integer(1)}}), "End " + t.offset(0).to_string());
  c.expect(t.offset(1) == DegreeTable({{2, Integer(5)}}), "offset 1 " + t.offset(1).to_string());
  c.expect(t.offset(1) == oracle::sheaf_orbit_table(5, 1), "offset 1 vs h^3(Omega^1(1)|X)");
  const std::vector<Integer> row = gram_circulant(5);
  const std::vector<Integer> expected{0, 5, -10, 10, -5};
  c.expect(row == expected, "euler row");

  const StableCollection g = gepner_collection(5);
  const GradedQuiver pair = heart_quiver(g, 0, 2);
  c.expect(pair.count(0, 1, 1) == 5 && pair.count(1, 0, 2) == 5, "pair arrows");
  c.expect(pair.count(0, 0, 3) == 1 && pair.count(1, 1, 3) == 1, "pair loops");
  c.expect(pair.arrows.size() == 4, "pair has extra arrows");

  const StableCollection m = mutate(g, 0);
  const GradedQuiver mutated = heart_quiver(m, 0, 2);
  c.expect(mutated.vertices[0] == "t^-1O[1]" && mutated.vertices[1] == "O", "mutated labels");
  c.expect(mutated.count(1, 0, 0) == 5 && mutated.count(0, 1, 3) == 5, "mutated arrows");
  c.expect(mutated.count(0, 0, 3) == 1 && mutated.count(1, 1, 3) == 1, "mutated loops");
  c.expect(mutated.arrows.size() == 4, "mutated has extra arrows");

  const Integer hrr = oracle::sheaf_euler_line_bundle(5, 1);
  c.expect(abs(hrr) == pair.count(0, 1, 1), "forward count vs |chi(O_X(1))| = " + hrr.get_str());
  return finish(9, "quintic-predictions", c, start);
}

CriterionResult properties() {
  const auto start = Clock::now();
  Checks c;
  for (int n = 3; n <= 6; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const OrbitHomTable t = orbit_hom_table(n);
    for (int delta = 0; delta < n; ++delta) {
      // Hom(object D, object 0) against Hom(object 0, object D): residue n - D at offset -D.
      const DegreeTable forward = t.at_offset(delta);
      const DegreeTable backward = t.at_offset(-delta);
      for (int d = -2 * n; d <= 2 * n; ++d)
        c.expect(forward.at(d) == backward.at(n - 2 - d), tag + " Serre at D=" + std::to_string(delta));
      const Integer chi = t.offset(delta).euler();
      const Integer dual = t.offset(n - delta).euler();
      c.expect(chi == ((n % 2 == 0) ? dual : Integer(-dual)), tag + " pairing symmetry");
    }
    const OrbitHomTable wide = orbit_hom_table(n, 2);
    for (int delta = 0; delta < n; ++delta)
      c.expect(wide.offset(delta) == t.offset(delta), tag + " representative window");
  }

  const StableCollection g = gepner_collection(5);
  const GradedQuiver mutated = heart_quiver(mutate(g, 0), 0, 2);
  const GradedQuiver large = heart_quiver(large_radius_collection(5, 0, 1), 0, 2);
  c.expect(mutated.between_distinct() == large.between_distinct(), "mutation vs O(1) > O Kronecker");
  c.expect(mutated.between_distinct() ==
               std::vector<std::pair<int, Integer>>{{0, Integer(5)}, {3, Integer(5)}},
           "degree-zero Kronecker pattern");

  const std::vector<StableObject> triple(g.entries().begin(), g.entries().begin() + 3);
  c.expect(is_cluster_collection(StabilityKind::gepner, 5, triple).ok, "cluster triple");

  for (int n = 2; n <= 6; ++n)
    c.expect(k_rank(n) == ipow(Integer(n - 1), n), "k_rank n=" + std::to_string(n));
  return finish(10, "property-suites", c, start);
}

CriterionResult literal_diagnostic() {
  const auto start = Clock::now();
  Checks c;
  c.expect(compare_literal(2).matches, "n=2 should match");
  for (int n = 3; n <= 6; ++n) {
    const auto cmp = compare_literal(n);
    c.expect(!cmp.matches, "n=" + std::to_string(n) + " discrepancy not flagged");
  }
  const auto three = compare_literal(3);
  return finish(11, "literal-formula-diagnostic", c, start,
                "n=3 literal " + three.literal.to_string("q") + " vs " + three.sector_sum.to_string("q"));
}

}  // namespace

std::vector<Criterion> criteria() {
  return {
      {1, "poincare-printed-values", poincare_values},
      {2, "euler-characteristic-closed-form", euler_closed_form},
      {3, "quantum-dilog-jm-closed-form", dilog_jm},
      {4, "generating-function-identity", generating_identity},
      {5, "quasimodular-identity", quasimodular},
      {6, "mf-periodicity", mf_periodicity},
      {7, "per-factor-tables", per_factor},
      {8, "orbit-calibration-n3", orbit_calibration},
      {9, "quintic-predictions", quintic},
      {10, "property-suites", properties},
      {11, "literal-formula-diagnostic", literal_diagnostic},
  };
}

std::vector<CriterionResult> run_all() {
  const auto start = Clock::now();
  std::vector<CriterionResult> out;
  for (const auto& criterion : criteria()) {
    try {
      out.push_back(criterion.run());
    } catch (const std::exception& e) {
      out.push_back(CriterionResult{criterion.id, criterion.name, false, std::string("threw: ") + e.what(), 0.0});
    }
  }
  const double total = since(start);
  bool all = true;
  for (const auto& r : out) all = all && r.pass;
  char buf[64];
  std::snprintf(buf, sizeof buf, "criteria 1-11 in %.2fs", total);
  out.push_back(CriterionResult{12, "verify-all-time-budget", all && total < 300.0, buf, total});
  return out;
}

std::string format(const CriterionResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", r.seconds);
  return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + " (" + buf +
         "): " + r.detail;
}

}  // namespace fermat::acceptance
