#include <doctest.h>

#include "helpers.hpp"
#include "reflex/subspace.hpp"

using namespace reflex;
using reflex::testing::q;
using reflex::testing::random_subspace;

namespace {

Subspace line(std::size_t ambient, const Vector& v) { return Subspace::span(ambient, {v}); }

const Subspace e1 = Subspace::coordinate(2, 0b01);
const Subspace e2 = Subspace::coordinate(2, 0b10);

}  // namespace

TEST_CASE("lattice operations on coordinate lines") {
  CHECK(sum(e1, e2) == Subspace::full(2));
  CHECK(intersect(e1, e2) == Subspace::zero(2));
  CHECK(ortho_complement(line(2, {q(1), q(1)})) == line(2, {q(1), q(-1)}));
  CHECK(leq(Subspace::zero(2), e1));
  CHECK(leq(e1, Subspace::full(2)));
  CHECK_FALSE(leq(e1, e2));
}

TEST_CASE("image and preimage of the matrix unit E12") {
  const Matrix matrix_unit = Matrix::unit(2, 2, 0, 1);  // sends e2 to e1
  CHECK(image(matrix_unit, e2) == e1);
  CHECK(image(matrix_unit, e1) == Subspace::zero(2));
  CHECK(preimage(matrix_unit, e1) == Subspace::full(2));
  CHECK(preimage(matrix_unit, Subspace::zero(2)) == e1);  // kernel of E12
}

TEST_CASE("projection matrices") {
  CHECK(projection_matrix(Subspace::full(2)) == Matrix::identity(2));
  CHECK(projection_matrix(Subspace::zero(2)) == Matrix(2, 2));
  Matrix half(2, 2);
  half(0, 0) = half(0, 1) = half(1, 0) = half(1, 1) = q(1, 2);
  CHECK(projection_matrix(line(2, {q(1), q(1)})) == half);
}

TEST_CASE("projection matrices are Hermitian idempotents with the right range") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + rng() % 3;
    const Subspace u = random_subspace(rng, n);
    const Matrix p = projection_matrix(u);
    CHECK(p * p == p);
    CHECK(p.adjoint() == p);
    CHECK(image(p, Subspace::full(n)) == u);
  }
}

TEST_CASE("complement laws and the modular dimension law") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 1 + rng() % 4;
    const Subspace u = random_subspace(rng, n), v = random_subspace(rng, n);
    CHECK(u.dim() + v.dim() == sum(u, v).dim() + intersect(u, v).dim());
    const Subspace uc = ortho_complement(u);
    CHECK(uc.dim() == n - u.dim());
    CHECK(sum(u, uc) == Subspace::full(n));
    CHECK(intersect(u, uc) == Subspace::zero(n));
    CHECK(ortho_complement(uc) == u);
    // exact orthogonality of every basis cross pair
    for (const auto& x : u.basis())
      for (const auto& y : uc.basis()) {
        GaussianRational dot;
        for (std::size_t t = 0; t < n; ++t) dot += x[t] * y[t].conj();
        CHECK(dot.is_zero());
      }
  }
}

TEST_CASE("pair order, corners, join and meet") {
  const ProjectionPair bottom{Subspace::zero(2), Subspace::full(2)};
  const ProjectionPair top{Subspace::full(2), Subspace::zero(2)};
  const ProjectionPair mid{e1, e2};
  CHECK(pair_leq(bottom, mid));
  CHECK(pair_leq(mid, top));
  CHECK(pair_leq(bottom, top));
  CHECK_FALSE(pair_leq(top, bottom));

  const ProjectionPair join = pair_join({e1, Subspace::full(2)}, {Subspace::zero(2), e2});
  CHECK(join == mid);
  CHECK(pair_meet(mid, mid) == mid);
}

TEST_CASE("pair absorption laws on random pairs") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 25; ++k) {
    const std::size_t n = 1 + rng() % 3;
    const ProjectionPair a{random_subspace(rng, n), random_subspace(rng, n)};
    const ProjectionPair b{random_subspace(rng, n), random_subspace(rng, n)};
    CHECK(pair_join(a, pair_meet(a, b)) == a);
    CHECK(pair_meet(a, pair_join(a, b)) == a);
    CHECK(pair_leq(pair_meet(a, b), a));
    CHECK(pair_leq(a, pair_join(a, b)));
  }
}

TEST_CASE("the pair order is a partial order") {
  std::mt19937_64 rng(97);
  for (int k = 0; k < 25; ++k) {
    const std::size_t n = 1 + rng() % 3;
    const ProjectionPair a{random_subspace(rng, n), random_subspace(rng, n)};
    const ProjectionPair b{random_subspace(rng, n), random_subspace(rng, n)};
    const ProjectionPair c{random_subspace(rng, n), random_subspace(rng, n)};
    CHECK(pair_leq(a, a));
    if (pair_leq(a, b) && pair_leq(b, a)) CHECK(a == b);
    if (pair_leq(a, b) && pair_leq(b, c)) CHECK(pair_leq(a, c));
    // meet and join below/above everything comparable
    const ProjectionPair m = pair_meet(a, b);
    CHECK(pair_leq(m, b));
  }
}

TEST_CASE("canonical form makes set equality structural") {
  const Subspace u = Subspace::span(2, {{q(1), q(1)}, {q(1), q(-1)}});
  CHECK(u == Subspace::full(2));
  const Subspace v = Subspace::span(3, {{q(2), q(4), q(0)}, {q(1), q(2), q(0)}});
  CHECK(v.dim() == 1);
  CHECK(v.basis()[0] == Vector{q(1), q(2), q(0)});
}
