#pragma once

#include <optional>
#include <vector>

#include "reflex/invariant.hpp"

namespace reflex {

// Ambient data for the bilattice of a space M: the bimodule algebras and the
// generator sets whose invariant subspaces realize Lat(A_M) and
// Lat(B_M)^perp (the latter as invariance under the adjoints of B_M).
struct BilatticeContext {
  OperatorSpace m;
  OperatorSpace a_alg;
  OperatorSpace b_alg;
  GeneratorSet a_gens;
  GeneratorSet b_star_gens;

  static BilatticeContext make(const OperatorSpace& m);
};

// Membership in the unrestricted bilattice: Q T P = 0 for every T in M.
bool annihilates(const ProjectionPair& pair, const OperatorSpace& m);

// Membership in Bil(M): annihilating pair with P invariant under A_M and Q
// invariant under B_M^*.
bool in_bilattice(const ProjectionPair& pair, const BilatticeContext& ctx);

// The largest Q in Lat(B_M)^perp making (P, Q) an annihilating pair: the
// greatest invariant subspace inside (M P H1)^perp. Requires P in Lat(A_M).
Subspace phi(const Subspace& p, const BilatticeContext& ctx);

// Dual map: the largest P in Lat(A_M) with (P, Q) annihilating, computed
// inside the meet of the preimages of (Q H2)^perp. Requires Q in Lat(B_M^*).
Subspace theta(const Subspace& q, const BilatticeContext& ctx);

// Join-definition routes over an explicitly enumerated partner lattice;
// agree with the fixpoint routes whenever the enumeration is complete.
Subspace phi_by_join(const Subspace& p, const BilatticeContext& ctx, const std::vector<Subspace>& lat_b_perp);
Subspace theta_by_join(const Subspace& q, const BilatticeContext& ctx, const std::vector<Subspace>& lat_a);

// Psi_1(P,Q) = (theta(phi(P)), phi(P)); Psi_2(P,Q) = (theta(Q), phi(theta(Q))).
// Inputs must lie in Bil(M); so do the outputs.
ProjectionPair psi1(const ProjectionPair& pair, const BilatticeContext& ctx);
ProjectionPair psi2(const ProjectionPair& pair, const BilatticeContext& ctx);

// Enlarges an annihilating pair to one in Bil(M) dominating it in both
// components: closures under the actions of A_M and B_M^*.
ProjectionPair enlarge(const ProjectionPair& pair, const BilatticeContext& ctx);

// {T : Q T P = 0 for all pairs}; the empty family yields the full space.
OperatorSpace op_space_of(const std::vector<ProjectionPair>& pairs, std::size_t h1, std::size_t h2);

struct SuppliedLattices {
  std::vector<Subspace> lat_a;
  std::vector<Subspace> lat_b_perp;
};

struct FiniteBilattice {
  std::vector<Subspace> lat_a;       // canonical order
  std::vector<Subspace> lat_b_perp;  // canonical order
  std::vector<ProjectionPair> pairs;
  bool caller_asserted = false;  // completeness asserted by caller, not proved
};

// True when both bimodule algebras contain their diagonal masa units and the
// ambient dimensions fit under the enumeration cap.
bool coordinate_enumeration_applies(const BilatticeContext& ctx, std::size_t max_enum_dim);

// Materializes Bil(M) from complete lattices: the coordinate enumeration in
// the diagonal-containing case, or caller-supplied lattices (validated for
// invariance, the corner elements, and join/meet closure).
FiniteBilattice enumerate_bil(const BilatticeContext& ctx, std::size_t max_enum_dim,
                              const std::optional<SuppliedLattices>& supplied = {});

// Deterministic stream of random annihilating pairs (P mostly non-invariant;
// Q drawn inside the admissible complement). Every returned pair passes
// annihilates().
std::vector<ProjectionPair> sample_annihilating_pairs(const BilatticeContext& ctx, std::size_t count,
                                                      unsigned long long seed);

}  // namespace reflex
