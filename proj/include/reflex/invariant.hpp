#pragma once

#include <vector>

#include "reflex/operator_space.hpp"

namespace reflex {

// A set of square operators acting on a common space; the acting set of
// invariance tests and of the Lat/Alg correspondence.
struct GeneratorSet {
  std::size_t ambient = 0;
  std::vector<Matrix> generators;

  static GeneratorSet from_space(const OperatorSpace& algebra);
  static GeneratorSet adjoints_of(const OperatorSpace& algebra);
};

// T w <= w for every generator T; equivalent to P^perp T P = 0.
bool is_invariant(const Subspace& w, const GeneratorSet& g);

// Least invariant subspace containing w: grow by images until stable.
// Dimension is strictly monotone, so at most ambient rounds run.
Subspace smallest_invariant_containing(const GeneratorSet& g, const Subspace& w);

// Greatest invariant subspace inside w: shrink by preimages until stable.
// Realizes joins of the form "largest invariant subspace within a
// constraint subspace", since joins of invariant subspaces are invariant.
Subspace largest_invariant_within(const GeneratorSet& g, const Subspace& w);

// {T : (I - P) T P = 0 for every subspace in f}; contains the identity.
OperatorSpace alg_of(std::size_t ambient, const std::vector<Subspace>& f);

// True when every diagonal matrix unit E_ii lies in the span of g. In that
// case every invariant subspace decomposes along coordinates, so the
// coordinate enumeration below is the whole invariant-subspace lattice.
bool spans_diagonal_units(const GeneratorSet& g);

// All invariant coordinate subspaces, by filtering the 2^n candidates, in
// mask order. Requires spans_diagonal_units(g) and ambient <= max_enum_dim.
std::vector<Subspace> enumerate_coordinate_lat(const GeneratorSet& g, std::size_t max_enum_dim = 16);

}  // namespace reflex
