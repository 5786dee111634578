#include "fermat/stability/collection.hpp"

#include <set>
#include <stdexcept>

#include "fermat/orbit/tensor_orbit.hpp"

namespace fermat {

std::string to_string(StabilityKind kind) {
  return kind == StabilityKind::gepner ? "gepner" : "large-radius";
}

bool stably_greater(StabilityKind kind, const StableObject& a, const StableObject& b) {
  if (kind == StabilityKind::gepner) return a.phase > b.phase;
  if (a.shift != b.shift) return a.shift > b.shift;
  return a.phase > b.phase;
}

std::string label(StabilityKind kind, const StableObject& o) {
  std::string out;
  if (kind == StabilityKind::gepner)
    out = o.label == 0 ? "O" : "t^-" + std::to_string(o.label) + "O";
  else
    out = o.label == 0 ? "O" : "O(" + std::to_string(o.label) + ")";
  if (o.shift != 0) out += "[" + std::to_string(o.shift) + "]";
  return out;
}

StableCollection::StableCollection(StabilityKind kind, int n, std::vector<StableObject> entries)
    : kind_(kind), n_(n), entries_(std::move(entries)) {
  if (n_ < 2) throw std::invalid_argument("StableCollection: n must be >= 2");
  if (entries_.empty()) throw std::invalid_argument("StableCollection: empty window");
  std::set<int> seen;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!seen.insert(entries_[i].label).second)
      throw std::invalid_argument("StableCollection: duplicate label");
    if (i > 0 && !stably_greater(kind_, entries_[i - 1], entries_[i]))
      throw std::invalid_argument("StableCollection: entries not strictly ordered");
  }
}

StableObject gepner_object(int n, int mu, int shift) {
  return StableObject{mu, shift, make_rational(-mu, n) + make_rational(shift, 2)};
}

StableCollection gepner_collection(int n) {
  if (n < 2) throw std::invalid_argument("gepner_collection: n must be >= 2");
  std::vector<StableObject> entries;
  for (int mu = 0; mu < n; ++mu) entries.push_back(gepner_object(n, mu));
  return StableCollection(StabilityKind::gepner, n, std::move(entries));
}

RatPoly hilbert_poly(int n, int mu) {
  if (n < 2) throw std::invalid_argument("hilbert_poly: n must be >= 2");
  return poly_binomial(mu + n - 1, n - 1) - poly_binomial(mu - 1, n - 1);
}

namespace {

Rational reduced_slope(int n, int mu) {
  const RatPoly p = hilbert_poly(n, mu);
  if (p.degree() < 1) throw std::invalid_argument("large-radius order needs a positive-dimensional X");
  return p.coeff(p.degree() - 1) / p.coeff(p.degree());
}

Integer sections(int n, int t) {
  if (t < 0) return 0;
  const long dim = n - 1;
  Integer h = binomial(t + dim, dim);
  if (t - n + dim >= 0) h -= binomial(t - n + dim, dim);
  return h;
}

}  // namespace

StableCollection large_radius_collection(int n, int lo, int hi) {
  if (n < 3) throw std::invalid_argument("large_radius_collection: n must be >= 3");
  if (lo > hi) throw std::invalid_argument("large_radius_collection: empty window");
  std::vector<StableObject> entries;
  for (int mu = hi; mu >= lo; --mu) entries.push_back(StableObject{mu, 0, reduced_slope(n, mu)});
  return StableCollection(StabilityKind::large_radius, n, std::move(entries));
}

DegreeTable line_bundle_cohomology(int n, int t) {
  if (n < 2) throw std::invalid_argument("line_bundle_cohomology: n must be >= 2");
  DegreeTable out;
  if (n == 2) {  // two reduced points
    out.add(0, Integer(2));
    return out;
  }
  out.add(0, sections(n, t));
  out.add(n - 2, sections(n, -t));  // Serre duality, trivial canonical bundle
  return out;
}

DegreeTable object_hom(StabilityKind kind, int n, const StableObject& a, const StableObject& b) {
  const DegreeTable base = kind == StabilityKind::gepner
                               ? cached_orbit_table(n).hom(a.label, b.label)
                               : line_bundle_cohomology(n, b.label - a.label);
  return base.shifted(a.shift - b.shift);
}

StableCollection mutate(const StableCollection& c, std::size_t i) {
  if (i + 1 >= c.size()) throw std::out_of_range("mutate: no consecutive pair at this index");
  const StableObject& e = c[i];
  const StableObject& f = c[i + 1];
  if (object_hom(c.kind(), c.n(), e, f).at(1) == 0)
    throw std::domain_error("mutate: Hom(" + label(c.kind(), e) + ", " + label(c.kind(), f) +
                            "[1]) vanishes");
  StableObject lifted = f;
  lifted.shift += 1;
  if (c.kind() == StabilityKind::gepner) lifted.phase += make_rational(1, 2);
  if (!stably_greater(c.kind(), lifted, e))
    throw std::domain_error("mutate: shifted object does not overtake its neighbour");
  auto entries = c.entries();
  entries[i] = lifted;
  entries[i + 1] = e;
  return StableCollection(StableCollection::Unchecked{}, c.kind(), c.n(), std::move(entries));
}

StableCollection mutate_dual(const StableCollection& c, std::size_t i) {
  if (i + 1 >= c.size()) throw std::out_of_range("mutate_dual: no consecutive pair at this index");
  const StableObject& a = c[i];
  const StableObject& b = c[i + 1];
  if (object_hom(c.kind(), c.n(), b, a).at(0) == 0)
    throw std::domain_error("mutate_dual: Hom(" + label(c.kind(), b) + ", " + label(c.kind(), a) +
                            ") vanishes");
  StableObject lowered = a;
  lowered.shift -= 1;
  if (c.kind() == StabilityKind::gepner) lowered.phase -= make_rational(1, 2);
  if (!stably_greater(c.kind(), b, lowered))
    throw std::domain_error("mutate_dual: shifted object does not drop below its neighbour");
  auto entries = c.entries();
  entries[i] = b;
  entries[i + 1] = lowered;
  return StableCollection(StableCollection::Unchecked{}, c.kind(), c.n(), std::move(entries));
}

StableCollection monodromy(const StableCollection& c, StabilityKind kind) {
  if (kind != c.kind()) throw std::invalid_argument("monodromy: kind does not match the collection");
  auto entries = c.entries();
  for (auto& o : entries) {
    if (kind == StabilityKind::large_radius) {
      o.label += 1;
      o.phase = reduced_slope(c.n(), o.label);
    } else {
      o.label -= 1;
      if (o.label < 0) {
        o.label += c.n();
        o.shift += 2;
      }
      o.phase += make_rational(1, c.n());
    }
  }
  return StableCollection(kind, c.n(), std::move(entries));
}

ClusterCheck is_cluster_collection(StabilityKind kind, int n, std::span<const StableObject> objects) {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      const DegreeTable h = object_hom(kind, n, objects[i], objects[j]);
      const std::string pair = label(kind, objects[i]) + " -> " + label(kind, objects[j]);
      if (i == j) {
        if (h.at(0) != 1) return {false, "End^0(" + label(kind, objects[i]) + ") = " + h.at(0).get_str()};
        if (!h.empty() && h.min_degree() < 0)
          return {false, "negative self-Ext on " + label(kind, objects[i])};
        continue;
      }
      if (!h.empty() && h.min_degree() <= 0)
        return {false, pair + " has Hom in degree " + std::to_string(h.min_degree())};
    }
  }
  return {true, ""};
}

}  // namespace fermat
