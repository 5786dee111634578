#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fermat/exact/arith.hpp"
#include "fermat/mf/degree_table.hpp"
#include "fermat/mf/graded_mf.hpp"

namespace fermat {

// A weight-zero even map between two factorizations: component 0 is
// P0 -> Q0, component 1 is P1 -> Q1. Each component is coefficient * x^exponent
// when the weight difference allows a map, and absent otherwise.
struct EvenMap {
  Factorization source;
  Factorization target;
  std::array<std::optional<int>, 2> exponent;
  std::array<Rational, 2> coefficient;
};

// A cohomology class in Hom^degree(source, target), stored as a cocycle
// representative M -> N[degree].
struct MorphismClass {
  GradedMF source;
  GradedMF target;
  int degree = 0;
  EvenMap representative;
};

// Degree-zero cohomology of the weight-zero part of the morphism complex
// between two factorizations.
struct MorphismCohomology {
  Factorization source;
  Factorization target;
  std::array<std::optional<int>, 2> exponent;  // even slots
  std::vector<std::vector<Rational>> cocycles;    // basis of Z^0 (in slot space)
  std::vector<std::vector<Rational>> coboundaries;  // spanning set of B^0
  std::vector<std::vector<Rational>> classes;     // complement of B^0 in Z^0
  std::size_t dimension() const { return classes.size(); }
};

MorphismCohomology morphism_cohomology(const Factorization& source, const Factorization& target);

/// dim Hom^d(M, N) = dim H^0 Hom(M, N[d]) for every d with a nonzero entry.
/// The weight refinement records the x-degree of each class representative.
/// Throws std::invalid_argument on mismatched potentials.
DegreeTable mf_hom_table(const GradedMF& m, const GradedMF& n);

/// Basis of Hom^d(M, N) as cocycle representatives.
std::vector<MorphismClass> hom_basis(const GradedMF& m, const GradedMF& n, int degree);

/// g[deg f] o f in Hom^{deg f + deg g}(f.source, g.target); needs f.target == g.source.
MorphismClass compose(const MorphismClass& g, const MorphismClass& f);

bool is_null_homotopic(const MorphismClass& f);

}  // namespace fermat
