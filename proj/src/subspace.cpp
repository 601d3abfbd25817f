#include "reflex/subspace.hpp"

#include <stdexcept>

namespace reflex {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, {}); }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e(ambient);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw std::invalid_argument("spanning vector has wrong length");
  const Matrix r = rref(Matrix::from_rows(vectors, ambient));
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Vector row = r.row(i);
    bool nonzero = false;
    for (const auto& e : row)
      if (!e.is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) basis.push_back(std::move(row));
  }
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::coordinate(std::size_t ambient, std::uint32_t mask) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient; ++i) {
    if (!(mask & (std::uint32_t(1) << i))) continue;
    Vector e(ambient);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return Subspace(ambient, std::move(basis));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
  // One reduction pass suffices: basis rows are in reduced echelon form, so
  // each row is the only one with a nonzero entry in its pivot column.
  Vector r = v;
  for (const auto& row : basis_) {
    std::size_t pivot = 0;
    while (pivot < ambient_ && row[pivot].is_zero()) ++pivot;
    const GaussianRational c = r[pivot];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * row[j];
  }
  for (const auto& e : r)
    if (!e.is_zero()) return false;
  return true;
}

int Subspace::compare(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_ ? -1 : 1;
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_; ++j) {
      const int c = GaussianRational::compare(a.basis_[i][j], b.basis_[i][j]);
      if (c != 0) return c;
    }
  return 0;
}

Matrix basis_as_rows(const Subspace& u) { return Matrix::from_rows(u.basis(), u.ambient()); }

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  std::vector<Vector> all = u.basis();
  all.insert(all.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.ambient(), all);
}

Subspace ortho_complement(const Subspace& u) {
  // <x, b> = sum_j x_j conj(b_j), so the constraint rows are conj(basis).
  return Subspace::span(u.ambient(), nullspace(basis_as_rows(u).conjugate()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return ortho_complement(sum(ortho_complement(u), ortho_complement(v)));
}

bool leq(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return sum(u, v).dim() == v.dim();
}

Subspace image(const Matrix& a, const Subspace& u) {
  if (a.cols() != u.ambient()) throw std::invalid_argument("image: shape mismatch");
  std::vector<Vector> vecs;
  vecs.reserve(u.dim());
  for (const auto& b : u.basis()) vecs.push_back(mul(a, b));
  return Subspace::span(a.rows(), vecs);
}

Matrix membership_constraints(const Subspace& u) { return basis_as_rows(ortho_complement(u)).conjugate(); }

Subspace preimage(const Matrix& a, const Subspace& u) {
  if (a.rows() != u.ambient()) throw std::invalid_argument("preimage: shape mismatch");
  return Subspace::span(a.cols(), nullspace(membership_constraints(u) * a));
}

Matrix projection_matrix(const Subspace& u) {
  const std::size_t n = u.ambient();
  if (u.is_zero()) return Matrix(n, n);
  const Matrix b = basis_as_rows(u).transpose();  // basis vectors as columns
  const Matrix bh = b.adjoint();
  return b * inverse(bh * b) * bh;
}

int ProjectionPair::compare(const ProjectionPair& a, const ProjectionPair& b) {
  const int c = Subspace::compare(a.p, b.p);
  return c != 0 ? c : Subspace::compare(a.q, b.q);
}

bool pair_leq(const ProjectionPair& a, const ProjectionPair& b) { return leq(a.p, b.p) && leq(b.q, a.q); }

ProjectionPair pair_join(const ProjectionPair& a, const ProjectionPair& b) {
  return {sum(a.p, b.p), intersect(a.q, b.q)};
}

ProjectionPair pair_meet(const ProjectionPair& a, const ProjectionPair& b) {
  return {intersect(a.p, b.p), sum(a.q, b.q)};
}

}  // namespace reflex
