#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fermat/exact/arith.hpp"
#include "fermat/exact/poly.hpp"
#include "fermat/mf/degree_table.hpp"

namespace fermat {

enum class StabilityKind { gepner, large_radius };

std::string to_string(StabilityKind kind);

// gepner: tau~^{-label} O [shift], phase = -label/n + shift/2 in units of a full turn.
// large_radius: O(label) [shift], phase = slope of the reduced Hilbert polynomial.
struct StableObject {
  int label = 0;
  int shift = 0;
  Rational phase;
  bool operator==(const StableObject& o) const {
    return label == o.label && shift == o.shift && phase == o.phase;
  }
};

class StableCollection {
 public:
  /// Validates that entries are strictly decreasing in the kind's order and labels distinct.
  StableCollection(StabilityKind kind, int n, std::vector<StableObject> entries);

  StabilityKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<StableObject>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const StableObject& operator[](std::size_t i) const { return entries_.at(i); }

 private:
  friend StableCollection mutate(const StableCollection&, std::size_t);
  friend StableCollection mutate_dual(const StableCollection&, std::size_t);
  struct Unchecked {};
  StableCollection(Unchecked, StabilityKind kind, int n, std::vector<StableObject> entries)
      : kind_(kind), n_(n), entries_(std::move(entries)) {}

  StabilityKind kind_;
  int n_;
  std::vector<StableObject> entries_;
};

/// True when a sits strictly above b in the kind's order.
bool stably_greater(StabilityKind kind, const StableObject& a, const StableObject& b);

std::string label(StabilityKind kind, const StableObject& o);

/// tau~^{-mu} O for 0 <= mu < n, phases -mu/n.
StableCollection gepner_collection(int n);

/// chi(O_X(t + mu)) on the degree-n Fermat hypersurface in P^{n-1}.
RatPoly hilbert_poly(int n, int mu);

/// O(mu) for lo <= mu <= hi ordered by reduced Hilbert polynomial. n >= 3.
StableCollection large_radius_collection(int n, int lo, int hi);

/// h^*(X, O_X(t)) as a degree table, from the restriction sequence on P^{n-1}.
DegreeTable line_bundle_cohomology(int n, int t);

/// Hom^*(a, b) between objects of the given kind.
DegreeTable object_hom(StabilityKind kind, int n, const StableObject& a, const StableObject& b);

/// Replaces the consecutive pair (E >= F) at i, i+1 by (F[1] >= E).
/// Throws std::domain_error when Hom(E, F[1]) = 0. Only the mutated pair is
/// re-checked for order.
StableCollection mutate(const StableCollection& c, std::size_t i);

/// Inverse move: (A >= B) with Hom(B, A) != 0 becomes (B >= A[-1]).
StableCollection mutate_dual(const StableCollection& c, std::size_t i);

/// large_radius: O(mu) -> O(mu + 1). gepner: apply tau~, which sends
/// tau~^{-mu} to tau~^{-(mu-1)} and wraps label -1 to n-1 with shift +2.
/// Throws std::invalid_argument on kind mismatch.
StableCollection monodromy(const StableCollection& c, StabilityKind kind);

struct ClusterCheck {
  bool ok = true;
  std::string witness;
};

/// Distinct objects have no Hom in degrees <= 0 and each object has only
/// the identity in degree 0 and nothing below.
ClusterCheck is_cluster_collection(StabilityKind kind, int n, std::span<const StableObject> objects);

/// Gepner-kind object tau~^{-mu} O [shift] with its phase.
StableObject gepner_object(int n, int mu, int shift = 0);

}  // namespace fermat
