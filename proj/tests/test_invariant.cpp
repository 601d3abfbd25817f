#include <doctest.h>

#include "helpers.hpp"
#include "reflex/invariant.hpp"

using namespace reflex;
using reflex::testing::q;
using reflex::testing::random_subspace;

namespace {

const Subspace e1 = Subspace::coordinate(2, 0b01);
const Subspace e2 = Subspace::coordinate(2, 0b10);

GeneratorSet upper_triangular_gens() {
  return {2, {Matrix::unit(2, 2, 0, 0), Matrix::unit(2, 2, 0, 1), Matrix::unit(2, 2, 1, 1)}};
}

}  // namespace

TEST_CASE("invariance tests") {
  const GeneratorSet upper = upper_triangular_gens();
  CHECK(is_invariant(Subspace::zero(2), upper));
  CHECK(is_invariant(Subspace::full(2), upper));
  CHECK(is_invariant(e1, upper));
  CHECK_FALSE(is_invariant(e2, GeneratorSet{2, {Matrix::unit(2, 2, 0, 1)}}));
}

TEST_CASE("smallest invariant subspace containing") {
  const GeneratorSet identity_only{2, {Matrix::identity(2)}};
  const Subspace diag_line = Subspace::span(2, {{q(1), q(1)}});
  CHECK(smallest_invariant_containing(identity_only, diag_line) == diag_line);

  const GeneratorSet lower{2, {Matrix::unit(2, 2, 1, 0)}};  // sends e1 to e2
  CHECK(smallest_invariant_containing(lower, e1) == Subspace::full(2));
  CHECK(smallest_invariant_containing(lower, Subspace::zero(2)) == Subspace::zero(2));
}

TEST_CASE("largest invariant subspace within") {
  const GeneratorSet lower{2, {Matrix::unit(2, 2, 1, 0)}};
  CHECK(largest_invariant_within(lower, Subspace::full(2)) == Subspace::full(2));
  CHECK(largest_invariant_within(lower, e1) == Subspace::zero(2));
  CHECK(largest_invariant_within(lower, Subspace::zero(2)) == Subspace::zero(2));
}

TEST_CASE("fixpoints are extremal invariant subspaces and monotone") {
  std::mt19937_64 rng(59);
  const GeneratorSet upper = upper_triangular_gens();
  for (int k = 0; k < 25; ++k) {
    const Subspace w = random_subspace(rng, 2);
    const Subspace grown = smallest_invariant_containing(upper, w);
    const Subspace shrunk = largest_invariant_within(upper, w);
    CHECK(leq(w, grown));
    CHECK(leq(shrunk, w));
    CHECK(is_invariant(grown, upper));
    CHECK(is_invariant(shrunk, upper));

    const Subspace w2 = sum(w, random_subspace(rng, 2));
    CHECK(leq(grown, smallest_invariant_containing(upper, w2)));
    CHECK(leq(shrunk, largest_invariant_within(upper, w2)));
  }
}

TEST_CASE("fixpoints match the extremes of the enumerated lattice") {
  // Against the complete coordinate lattice of a diagonal-containing
  // algebra: the growth fixpoint is the meet of all invariant subspaces
  // containing w, the shrink fixpoint the join of all inside w.
  std::mt19937_64 rng(83);
  const GeneratorSet upper = upper_triangular_gens();
  const auto lat = enumerate_coordinate_lat(upper);
  for (int k = 0; k < 20; ++k) {
    const std::size_t mask = rng() % 4;
    const Subspace w = Subspace::coordinate(2, static_cast<std::uint32_t>(mask));
    Subspace meet_above = Subspace::full(2);
    Subspace join_below = Subspace::zero(2);
    for (const auto& candidate : lat) {
      if (leq(w, candidate)) meet_above = intersect(meet_above, candidate);
      if (leq(candidate, w)) join_below = sum(join_below, candidate);
    }
    CHECK(smallest_invariant_containing(upper, w) == meet_above);
    CHECK(largest_invariant_within(upper, w) == join_below);
  }
}

TEST_CASE("complements of invariant subspaces are invariant for the adjoints") {
  std::mt19937_64 rng(61);
  const GeneratorSet upper = upper_triangular_gens();
  GeneratorSet adjoints{2, {}};
  for (const auto& t : upper.generators) adjoints.generators.push_back(t.adjoint());
  for (int k = 0; k < 20; ++k) {
    const Subspace w = smallest_invariant_containing(upper, random_subspace(rng, 2));
    CHECK(is_invariant(ortho_complement(w), adjoints));
  }
}

TEST_CASE("alg of a subspace family") {
  CHECK(alg_of(2, {Subspace::zero(2), Subspace::full(2)}) == OperatorSpace::full(2, 2));
  const OperatorSpace upper2 =
      OperatorSpace::span(2, 2, {Matrix::unit(2, 2, 0, 0), Matrix::unit(2, 2, 0, 1), Matrix::unit(2, 2, 1, 1)});
  CHECK(alg_of(2, {e1}) == upper2);
  const OperatorSpace diag2 = OperatorSpace::span(2, 2, {Matrix::unit(2, 2, 0, 0), Matrix::unit(2, 2, 1, 1)});
  CHECK(alg_of(2, {Subspace::zero(2), e1, e2, Subspace::full(2)}) == diag2);
}

TEST_CASE("alg_of contains the identity and leaves its inputs invariant") {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 15; ++k) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<Subspace> family{random_subspace(rng, n), random_subspace(rng, n)};
    const OperatorSpace alg = alg_of(n, family);
    CHECK(membership(Matrix::identity(n), alg));
    const GeneratorSet gens = GeneratorSet::from_space(alg);
    for (const auto& u : family) CHECK(is_invariant(u, gens));
    // Galois inflation: the family sits inside the invariant lattice of its algebra.
  }
}

TEST_CASE("coordinate lattice enumeration") {
  const GeneratorSet full_gens = GeneratorSet::from_space(OperatorSpace::full(2, 2));
  const auto lat_full = enumerate_coordinate_lat(full_gens);
  REQUIRE(lat_full.size() == 2);
  CHECK(lat_full[0] == Subspace::zero(2));
  CHECK(lat_full[1] == Subspace::full(2));

  const auto lat_upper = enumerate_coordinate_lat(upper_triangular_gens());
  REQUIRE(lat_upper.size() == 3);
  CHECK(lat_upper[0] == Subspace::zero(2));
  CHECK(lat_upper[1] == e1);
  CHECK(lat_upper[2] == Subspace::full(2));

  const GeneratorSet diag_gens{2, {Matrix::unit(2, 2, 0, 0), Matrix::unit(2, 2, 1, 1)}};
  CHECK(enumerate_coordinate_lat(diag_gens).size() == 4);

  CHECK_THROWS_AS(enumerate_coordinate_lat(GeneratorSet{2, {Matrix::unit(2, 2, 0, 1)}}), std::domain_error);
  CHECK_THROWS_AS(enumerate_coordinate_lat(diag_gens, 1), std::domain_error);
}
