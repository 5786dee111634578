#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "fermat/orbit/tensor_orbit.hpp"
#include "fermat/stability/collection.hpp"
#include "fermat/stability/quiver.hpp"
#include "fermat/verify/oracles.hpp"

using namespace fermat;

namespace {

std::vector<std::string> labels(const StableCollection& c) {
  std::vector<std::string> out;
  for (const auto& o : c.entries()) out.push_back(label(c.kind(), o));
  return out;
}

}  // namespace

TEST_CASE("gepner collection") {
  const StableCollection g = gepner_collection(5);
  CHECK(labels(g) == std::vector<std::string>{"O", "t^-1O", "t^-2O", "t^-3O", "t^-4O"});
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    CHECK(g[i].phase - g[i + 1].phase == make_rational(1, 5));
    CHECK(stably_greater(StabilityKind::gepner, g[i], g[i + 1]));
  }
  const StableCollection two = gepner_collection(2);
  CHECK(two.size() == 2);
  CHECK(two[0].phase - two[1].phase == make_rational(1, 2));
  CHECK_THROWS_AS(gepner_collection(1), std::invalid_argument);
}

TEST_CASE("collections reject bad order and duplicates") {
  const StableObject o = gepner_object(5, 0), t1 = gepner_object(5, 1);
  CHECK_THROWS_AS(StableCollection(StabilityKind::gepner, 5, {t1, o}), std::invalid_argument);
  CHECK_THROWS_AS(StableCollection(StabilityKind::gepner, 5, {o, o}), std::invalid_argument);
  CHECK_NOTHROW(StableCollection(StabilityKind::gepner, 5, {o, t1}));
}

TEST_CASE("hilbert polynomials") {
  CHECK(hilbert_poly(5, 0).eval(Rational(1)) == 5);
  CHECK(hilbert_poly(5, 0).eval(Rational(0)) == 0);
  CHECK(hilbert_poly(4, 0).eval(Rational(1)) == 4);
  CHECK(hilbert_poly(4, 0).eval(Rational(0)) == 2);
  for (int n = 3; n <= 6; ++n)
    for (int t = -6; t <= 6; ++t) {
      CHECK(hilbert_poly(n, 0).eval(Rational(t)) == Rational(oracle::sheaf_euler_line_bundle(n, t)));
      CHECK(hilbert_poly(n, 2).eval(Rational(t)) == hilbert_poly(n, 0).eval(Rational(t + 2)));
    }
}

TEST_CASE("line bundle cohomology matches the restricted Bott oracle") {
  for (int n = 3; n <= 6; ++n)
    for (int t = -7; t <= 7; ++t) CHECK(line_bundle_cohomology(n, t) == oracle::restricted_bott(n, 0, t));
}

TEST_CASE("large radius collection") {
  const StableCollection c = large_radius_collection(5, 0, 1);
  CHECK(labels(c) == std::vector<std::string>{"O(1)", "O"});
  CHECK(large_radius_collection(5, 0, 0).size() == 1);
  CHECK_THROWS_AS(large_radius_collection(5, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(large_radius_collection(2, 0, 1), std::invalid_argument);
  const StableCollection wide = large_radius_collection(4, -2, 3);
  for (std::size_t i = 0; i + 1 < wide.size(); ++i) CHECK(wide[i].label == wide[i + 1].label + 1);
}

TEST_CASE("quintic quivers") {
  const StableCollection g = gepner_collection(5);
  const GradedQuiver pair = heart_quiver(g, 0, 2);
  CHECK(pair.count(0, 1, 1) == 5);
  CHECK(pair.count(1, 0, 2) == 5);
  CHECK(pair.count(0, 0, 3) == 1);
  CHECK(pair.count(1, 1, 3) == 1);
  CHECK(pair.arrows.size() == 4);

  const GradedQuiver triple = heart_quiver(g, 0, 3);
  CHECK(triple.count(0, 1, 1) == 5);
  CHECK(triple.count(1, 2, 1) == 5);
  CHECK(triple.count(0, 2, 2) == 10);
  CHECK(triple.count(2, 0, 1) == 10);
  for (std::size_t v = 0; v < 3; ++v) CHECK(triple.count(v, v, 3) == 1);

  CHECK(heart_quiver(g, 2, 1).arrows.size() == 1);
  CHECK_THROWS_AS(heart_quiver(g, 4, 2), std::out_of_range);
  CHECK_THROWS_AS(heart_quiver(g, 0, 4), std::out_of_range);
  CHECK_THROWS_AS(heart_quiver(g, 0, 0), std::out_of_range);
}

TEST_CASE("forward arrow count equals |chi|") {
  for (int n = 3; n <= 5; ++n) {
    const GradedQuiver q = heart_quiver(gepner_collection(n), 0, 2);
    Integer forward = 0;
    for (const auto& [key, m] : q.arrows)
      if (std::get<0>(key) == 0 && std::get<1>(key) == 1) forward += m;
    CHECK(forward == abs(euler_pairing(n, 0, 1)));
  }
}

TEST_CASE("mutation") {
  const StableCollection g = gepner_collection(5);
  const StableCollection m = mutate(g, 0);
  CHECK(label(m.kind(), m[0]) == "t^-1O[1]");
  CHECK(label(m.kind(), m[1]) == "O");
  const GradedQuiver q = heart_quiver(m, 0, 2);
  CHECK(q.count(1, 0, 0) == 5);
  CHECK(q.count(0, 1, 3) == 5);

  const GradedQuiver large = heart_quiver(large_radius_collection(5, 0, 1), 0, 2);
  CHECK(q.between_distinct() == large.between_distinct());

  // Dual rule restores the labels.
  const StableCollection back = mutate_dual(m, 0);
  CHECK(back[0].label == g[0].label);
  CHECK(back[1].label == g[1].label);
  CHECK(back[1].shift == g[1].shift);

  // t^-1O > t^-3O in a sparse collection: Hom(E, F[1]) = Hom^1 at offset 2 is zero for n = 5.
  const StableCollection sparse(StabilityKind::gepner, 5, {gepner_object(5, 1), gepner_object(5, 3)});
  CHECK_THROWS_AS(mutate(sparse, 0), std::domain_error);
  CHECK_THROWS_AS(mutate(g, 4), std::out_of_range);
}

TEST_CASE("monodromy") {
  const StableCollection g = gepner_collection(5);
  const StableCollection once = monodromy(g, StabilityKind::gepner);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(once[i].phase - g[i].phase == make_rational(1, 5));
  StableCollection c = g;
  for (int i = 0; i < 5; ++i) c = monodromy(c, StabilityKind::gepner);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(c[i].label == g[i].label);
    CHECK(c[i].shift == g[i].shift + 2);
  }
  // Quivers see only offsets.
  CHECK(heart_quiver(once, 0, 2).between_distinct() == heart_quiver(g, 0, 2).between_distinct());

  const StableCollection lr = large_radius_collection(5, 0, 2);
  const StableCollection lr1 = monodromy(lr, StabilityKind::large_radius);
  for (std::size_t i = 0; i < lr.size(); ++i) CHECK(lr1[i].label == lr[i].label + 1);
  CHECK_THROWS_AS(monodromy(lr, StabilityKind::gepner), std::invalid_argument);
}

TEST_CASE("cluster collections") {
  const StableCollection g = gepner_collection(5);
  const std::vector<StableObject> triple(g.entries().begin(), g.entries().begin() + 3);
  CHECK(is_cluster_collection(StabilityKind::gepner, 5, triple).ok);
  const StableCollection m = mutate(g, 0);
  const std::vector<StableObject> mutated(m.entries().begin(), m.entries().begin() + 2);
  const ClusterCheck bad = is_cluster_collection(StabilityKind::gepner, 5, mutated);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.witness.empty());
  CHECK(is_cluster_collection(StabilityKind::gepner, 5, std::vector<StableObject>{g[0]}).ok);
}
