#pragma once

#include <optional>
#include <vector>

#include "reflex/subspace.hpp"

namespace reflex {

// Linear space of operators H1 -> H2, held as h2 x h1 matrices. The basis is
// canonical: vectorize, reduce, un-vectorize. Equality is structural.
class OperatorSpace {
 public:
  static OperatorSpace span(std::size_t h1, std::size_t h2, const std::vector<Matrix>& generators);
  static OperatorSpace zero(std::size_t h1, std::size_t h2);
  static OperatorSpace full(std::size_t h1, std::size_t h2);
  static OperatorSpace from_vec_span(std::size_t h1, std::size_t h2, const Subspace& vecs);

  std::size_t h1() const { return h1_; }
  std::size_t h2() const { return h2_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_square() const { return h1_ == h2_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  const Subspace& vec_span() const { return vec_; }

  friend bool operator==(const OperatorSpace& a, const OperatorSpace& b) {
    return a.h1_ == b.h1_ && a.h2_ == b.h2_ && a.vec_ == b.vec_;
  }
  friend bool operator!=(const OperatorSpace& a, const OperatorSpace& b) { return !(a == b); }

 private:
  OperatorSpace(std::size_t h1, std::size_t h2, Subspace vecs);
  std::size_t h1_ = 0, h2_ = 0;
  Subspace vec_;
  std::vector<Matrix> basis_;
};

bool membership(const Matrix& t, const OperatorSpace& m);
bool space_leq(const OperatorSpace& u, const OperatorSpace& v);
OperatorSpace space_sum(const OperatorSpace& u, const OperatorSpace& v);

// {T* : T in M}, a space of operators H2 -> H1.
OperatorSpace adjoint_space(const OperatorSpace& m);

// Span of all products TS, T in u, S in v (equals the span of the set of
// products, which is all the annihilator calculus ever sees).
OperatorSpace product_span(const OperatorSpace& u, const OperatorSpace& v);

// Trace-pairing annihilators tr(C A*) = 0; square context only. At finite
// dimension annihilator(preannihilator(M)) = M.
OperatorSpace preannihilator(const OperatorSpace& m);
OperatorSpace annihilator(const OperatorSpace& v);

// The largest algebra A with M A <= M, computed from the exact linear
// conditions vec(T_i A) = kron(I, T_i) vec(A) in vec-span(M).
OperatorSpace a_algebra(const OperatorSpace& m);
// The largest algebra B with B M <= M, via vec(B T_i) = kron(T_i^t, I) vec(B).
OperatorSpace b_algebra(const OperatorSpace& m);

OperatorSpace commutant(const OperatorSpace& m);

// Elements of sup's canonical basis that extend sub to span sup; empty iff
// sub == sup. Each returned matrix lies in sup but not in sub.
std::vector<Matrix> basis_completion(const OperatorSpace& sub, const OperatorSpace& sup);

struct Prop23Report {
  bool square = false;
  bool adjoint_identity = false;                      // (A_M)* = B_{M*}
  std::optional<bool> annihilator_identity_a;         // A_M = (M* M_perp)^perp
  std::optional<bool> annihilator_identity_b;         // B_M = (M M_perp)^perp
  bool selfadjoint = false;
  std::optional<bool> selfadjoint_cstar;              // A_M = B_M, star-closed
  std::optional<bool> von_neumann;                    // A_M = A_M'' (needs reflexivity)
};

// The reflexivity input for item (iv) comes from the decision engine; pass
// nullopt when no verdict is available and the item is skipped.
Prop23Report check_prop23(const OperatorSpace& m, std::optional<bool> m_reflexive = {});

}  // namespace reflex
