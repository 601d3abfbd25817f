#include <doctest.h>

#include "helpers.hpp"
#include "reflex/matrix.hpp"

using namespace reflex;
using reflex::testing::q;
using reflex::testing::random_matrix;

namespace {

Matrix m22(long a, long b, long c, long d) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("rref canonicalizes") {
  CHECK(rref(m22(2, 4, 1, 2)) == m22(1, 2, 0, 0));
  CHECK(rref(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(rref(m22(0, 1, 1, 0)) == Matrix::identity(2));
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const Matrix m = random_matrix(rng, rows, cols);
    const Matrix r = rref(m);
    CHECK(rref(r) == r);
    const auto basis = nullspace(m);
    CHECK(rank(m) + basis.size() == cols);
    for (const auto& v : basis) {
      const Vector image = mul(m, v);
      for (const auto& e : image) CHECK(e.is_zero());
    }
  }
}

TEST_CASE("nullspace canonical bases") {
  Matrix row(1, 2);
  row(0, 0) = 1;
  row(0, 1) = 1;
  const auto basis = nullspace(row);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == Vector{q(-1), q(1)});

  CHECK(nullspace(Matrix::identity(4)).empty());
  CHECK(nullspace(Matrix(2, 3)).size() == 3);
}

TEST_CASE("vec follows the column-stacking convention") {
  const Matrix m = m22(1, 2, 3, 4);
  CHECK(vec(m) == Vector{q(1), q(3), q(2), q(4)});
  CHECK(unvec(vec(m), 2, 2) == m);
}

TEST_CASE("kron(I2, m) is block diagonal") {
  const Matrix m = m22(1, 2, 3, 4);
  const Matrix k = kron(Matrix::identity(2), m);
  REQUIRE(k.rows() == 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(k(i, j) == m(i, j));
      CHECK(k(2 + i, 2 + j) == m(i, j));
      CHECK(k(i, 2 + j).is_zero());
      CHECK(k(2 + i, j).is_zero());
    }
}

TEST_CASE("vectorization identities on random shapes") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 25; ++k) {
    const std::size_t n1 = 1 + rng() % 3, n2 = 1 + rng() % 3, n3 = 1 + rng() % 3;
    const Matrix t = random_matrix(rng, n2, n1);
    const Matrix a = random_matrix(rng, n1, n3);
    CHECK(vec(t * a) == mul(kron(Matrix::identity(n3), t), vec(a)));
    const Matrix b = random_matrix(rng, n3, n2);
    CHECK(vec(b * t) == mul(kron(t.transpose(), Matrix::identity(n3)), vec(b)));
    const Matrix r = random_matrix(rng, 3, 2);
    CHECK(unvec(vec(r), 3, 2) == r);
  }
}

TEST_CASE("exact inverse") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 10; ++k) {
    Matrix m = random_matrix(rng, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) m(i, i) += q(20);  // keep it nonsingular
    CHECK(m * inverse(m) == Matrix::identity(3));
  }
  CHECK_THROWS_AS(inverse(m22(1, 2, 2, 4)), std::domain_error);
}
