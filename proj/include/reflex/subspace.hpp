#pragma once

#include <cstdint>
#include <vector>

#include "reflex/matrix.hpp"

namespace reflex {

// Subspace of C^n in canonical form: the basis rows form the unique reduced
// row echelon form of any spanning set, so subspace equality is structural
// equality. Stands for the orthogonal projection onto itself.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  // Span of the standard basis vectors selected by mask (bit i <-> e_{i+1}).
  static Subspace coordinate(std::size_t ambient, std::uint32_t mask);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  bool contains(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  // Total order for deterministic lattice listings: dimension, then entries.
  static int compare(const Subspace& a, const Subspace& b);

 private:
  Subspace(std::size_t ambient, std::vector<Vector> canonical) : ambient_(ambient), basis_(std::move(canonical)) {}
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

Matrix basis_as_rows(const Subspace& u);  // dim x ambient

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace ortho_complement(const Subspace& u);
bool leq(const Subspace& u, const Subspace& v);

Subspace image(const Matrix& a, const Subspace& u);
Subspace preimage(const Matrix& a, const Subspace& u);

// Rows whose kernel is exactly u (conjugated basis of the complement), so
// "x in u" becomes the linear condition membership_constraints(u) x = 0.
Matrix membership_constraints(const Subspace& u);

// The exact Hermitian idempotent with range u: P^2 = P, P^H = P.
Matrix projection_matrix(const Subspace& u);

// Pair (P, Q) under the product order: (P1,Q1) <= (P2,Q2) iff P1 <= P2 and
// Q1 >= Q2. Join and meet follow componentwise with the Q side flipped.
struct ProjectionPair {
  Subspace p, q;

  friend bool operator==(const ProjectionPair& a, const ProjectionPair& b) { return a.p == b.p && a.q == b.q; }
  friend bool operator!=(const ProjectionPair& a, const ProjectionPair& b) { return !(a == b); }
  static int compare(const ProjectionPair& a, const ProjectionPair& b);
};

bool pair_leq(const ProjectionPair& a, const ProjectionPair& b);
ProjectionPair pair_join(const ProjectionPair& a, const ProjectionPair& b);
ProjectionPair pair_meet(const ProjectionPair& a, const ProjectionPair& b);

}  // namespace reflex
