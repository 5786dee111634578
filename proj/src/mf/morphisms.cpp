#include "fermat/mf/morphisms.hpp"

#include <cstdlib>
#include <stdexcept>

#include "fermat/exact/linalg.hpp"

namespace fermat {

namespace {

std::optional<int> map_exponent(int source_weight, int target_weight) {
  if (source_weight < target_weight) return std::nullopt;
  return source_weight - target_weight;
}

// Slot index into the list of present even slots, or -1.
int present_index(const std::array<std::optional<int>, 2>& slots, int slot) {
  if (!slots[slot]) return -1;
  return (slot == 1 && slots[0]) ? 1 : 0;
}

int window_radius(const Factorization& m, const Factorization& n) {
  const int spread = std::abs(m.w0 - n.w0) + std::abs(m.w1 - n.w1);
  return 2 * spread / m.n + 6;
}

void check_same_potential(const GradedMF& m, const GradedMF& n) {
  if (m.n != n.n) throw std::invalid_argument("mismatched potential exponents");
}

}  // namespace

MorphismCohomology morphism_cohomology(const Factorization& src, const Factorization& tgt) {
  if (src.n != tgt.n) throw std::invalid_argument("mismatched potential exponents");
  const int n = src.n;
  MorphismCohomology out{src, tgt, {map_exponent(src.w0, tgt.w0), map_exponent(src.w1, tgt.w1)},
                         {}, {}, {}};
  const std::size_t width = (out.exponent[0] ? 1 : 0) + (out.exponent[1] ? 1 : 0);
  if (width == 0) return out;
  const int i0 = present_index(out.exponent, 0);
  const int i1 = present_index(out.exponent, 1);

  // D(phi) = d_N phi - phi d_M, landing in P0 -> Q1 and P1 -> Q0(n).
  std::vector<std::vector<Rational>> rows;
  if (map_exponent(src.w0, tgt.w1)) {
    std::vector<Rational> row(width);
    if (i0 >= 0) row[i0] += tgt.sign0;
    if (i1 >= 0) row[i1] -= src.sign0;
    rows.push_back(row);
  }
  if (map_exponent(src.w1, tgt.w0 - n)) {
    std::vector<Rational> row(width);
    if (i1 >= 0) row[i1] += tgt.sign1;
    if (i0 >= 0) row[i0] -= src.sign1;
    rows.push_back(row);
  }
  RationalMatrix d(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) d(r, c) = rows[r][c];
  out.cocycles = rows.empty() ? std::vector<std::vector<Rational>>{} : nullspace(d);
  if (rows.empty())
    for (std::size_t c = 0; c < width; ++c) {
      std::vector<Rational> e(width);
      e[c] = 1;
      out.cocycles.push_back(e);
    }

  // Homotopies h0 : P0 -> Q1(-n), h1 : P1 -> Q0; D(h) = d_N h + h d_M.
  if (map_exponent(src.w0, tgt.w1 + n)) {
    std::vector<Rational> col(width);
    if (i0 >= 0) col[i0] += tgt.sign1;
    if (i1 >= 0) col[i1] += src.sign1;
    out.coboundaries.push_back(col);
  }
  if (map_exponent(src.w1, tgt.w0)) {
    std::vector<Rational> col(width);
    if (i0 >= 0) col[i0] += src.sign0;
    if (i1 >= 0) col[i1] += tgt.sign0;
    out.coboundaries.push_back(col);
  }

  // Extend a basis of B^0 by cocycles to a basis of Z^0.
  std::vector<std::vector<Rational>> span;
  for (const auto& b : out.coboundaries)
    if (!in_span(span, b)) span.push_back(b);
  for (const auto& z : out.cocycles) {
    if (in_span(span, z)) continue;
    span.push_back(z);
    out.classes.push_back(z);
  }
  return out;
}

namespace {

EvenMap even_map_from(const MorphismCohomology& h, const std::vector<Rational>& v) {
  EvenMap f{h.source, h.target, h.exponent, {Rational(0), Rational(0)}};
  std::size_t idx = 0;
  for (int k = 0; k < 2; ++k)
    if (h.exponent[k]) f.coefficient[k] = v[idx++];
  return f;
}

int class_weight(const EvenMap& f) {
  for (int k = 0; k < 2; ++k)
    if (f.exponent[k] && f.coefficient[k] != 0) return *f.exponent[k];
  return 0;
}

}  // namespace

std::vector<MorphismClass> hom_basis(const GradedMF& m, const GradedMF& n, int degree) {
  check_same_potential(m, n);
  const auto h = morphism_cohomology(realize(m), realize(mf_shift(n, degree)));
  std::vector<MorphismClass> out;
  for (const auto& v : h.classes) out.push_back(MorphismClass{m, n, degree, even_map_from(h, v)});
  return out;
}

DegreeTable mf_hom_table(const GradedMF& m, const GradedMF& n) {
  check_same_potential(m, n);
  const Factorization fm = realize(m);
  const Factorization fn = realize(n);
  const int radius = window_radius(fm, fn);
  auto scan = [&](int r) {
    DegreeTable t;
    for (int d = -r; d <= r; ++d) {
      const auto h = morphism_cohomology(fm, shift_factorization(fn, d));
      for (const auto& v : h.classes)
        t.add(d, class_weight(even_map_from(h, v)), Integer(1));
    }
    return t;
  };
  DegreeTable table = scan(radius);
  // Enlarging the window by a full period on each side must not change anything.
  if (!(scan(radius + 2) == table))
    throw std::logic_error("mf_hom_table: degree window too small");
  return table;
}

MorphismClass compose(const MorphismClass& g, const MorphismClass& f) {
  if (!isomorphic(f.target, g.source) || f.target.n != g.source.n)
    throw std::invalid_argument("compose: target of f is not the source of g");
  if (realize(f.target) != realize(g.source))
    throw std::invalid_argument("compose: f.target and g.source must be realized identically");
  // g[d_f] : N[d_f] -> L[d_g + d_f]; an odd shift swaps the two components.
  const bool swap = (f.degree % 2) != 0;
  EvenMap out;
  out.source = f.representative.source;
  out.target = shift_factorization(realize(g.target), g.degree + f.degree);
  for (int k = 0; k < 2; ++k) {
    const int gk = swap ? 1 - k : k;
    const auto& fe = f.representative.exponent[k];
    const auto& ge = g.representative.exponent[gk];
    if (fe && ge) {
      out.exponent[k] = *fe + *ge;
      out.coefficient[k] = f.representative.coefficient[k] * g.representative.coefficient[gk];
    } else {
      out.exponent[k] = std::nullopt;
      out.coefficient[k] = 0;
    }
  }
  return MorphismClass{f.source, g.target, f.degree + g.degree, out};
}

bool is_null_homotopic(const MorphismClass& f) {
  const auto h = morphism_cohomology(f.representative.source, f.representative.target);
  std::vector<Rational> v;
  for (int k = 0; k < 2; ++k) {
    const bool has = f.representative.exponent[k].has_value() && f.representative.coefficient[k] != 0;
    if (has && !h.exponent[k]) throw std::logic_error("is_null_homotopic: component outside the complex");
    if (h.exponent[k]) v.push_back(has ? f.representative.coefficient[k] : Rational(0));
  }
  if (v.empty()) return true;
  return in_span(h.coboundaries, v);
}

}  // namespace fermat
