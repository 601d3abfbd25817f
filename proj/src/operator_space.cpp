#include "reflex/operator_space.hpp"

#include <stdexcept>

namespace reflex {

namespace {

void require_square(const OperatorSpace& m, const char* what) {
  if (!m.is_square()) throw std::invalid_argument(std::string(what) + " requires a square context");
}

std::vector<Vector> vec_all(const std::vector<Matrix>& mats) {
  std::vector<Vector> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(vec(m));
  return out;
}

}  // namespace

OperatorSpace::OperatorSpace(std::size_t h1, std::size_t h2, Subspace vecs) : h1_(h1), h2_(h2), vec_(std::move(vecs)) {
  basis_.reserve(vec_.dim());
  for (const auto& v : vec_.basis()) basis_.push_back(unvec(v, h2_, h1_));
}

OperatorSpace OperatorSpace::span(std::size_t h1, std::size_t h2, const std::vector<Matrix>& generators) {
  for (const auto& g : generators)
    if (g.rows() != h2 || g.cols() != h1) throw std::invalid_argument("generator shape mismatch");
  return OperatorSpace(h1, h2, Subspace::span(h1 * h2, vec_all(generators)));
}

OperatorSpace OperatorSpace::zero(std::size_t h1, std::size_t h2) {
  return OperatorSpace(h1, h2, Subspace::zero(h1 * h2));
}

OperatorSpace OperatorSpace::full(std::size_t h1, std::size_t h2) {
  return OperatorSpace(h1, h2, Subspace::full(h1 * h2));
}

OperatorSpace OperatorSpace::from_vec_span(std::size_t h1, std::size_t h2, const Subspace& vecs) {
  if (vecs.ambient() != h1 * h2) throw std::invalid_argument("vec-span ambient mismatch");
  return OperatorSpace(h1, h2, vecs);
}

bool membership(const Matrix& t, const OperatorSpace& m) {
  if (t.rows() != m.h2() || t.cols() != m.h1()) throw std::invalid_argument("membership: shape mismatch");
  return m.vec_span().contains(vec(t));
}

bool space_leq(const OperatorSpace& u, const OperatorSpace& v) {
  if (u.h1() != v.h1() || u.h2() != v.h2()) throw std::invalid_argument("space_leq: shape mismatch");
  return leq(u.vec_span(), v.vec_span());
}

OperatorSpace space_sum(const OperatorSpace& u, const OperatorSpace& v) {
  if (u.h1() != v.h1() || u.h2() != v.h2()) throw std::invalid_argument("space_sum: shape mismatch");
  return OperatorSpace::from_vec_span(u.h1(), u.h2(), sum(u.vec_span(), v.vec_span()));
}

OperatorSpace adjoint_space(const OperatorSpace& m) {
  std::vector<Matrix> adj;
  adj.reserve(m.dim());
  for (const auto& t : m.basis()) adj.push_back(t.adjoint());
  return OperatorSpace::span(m.h2(), m.h1(), adj);
}

OperatorSpace product_span(const OperatorSpace& u, const OperatorSpace& v) {
  if (u.h1() != v.h2()) throw std::invalid_argument("product_span: inner dimension mismatch");
  std::vector<Matrix> products;
  products.reserve(u.dim() * v.dim());
  for (const auto& t : u.basis())
    for (const auto& s : v.basis()) products.push_back(t * s);
  return OperatorSpace::span(v.h1(), u.h2(), products);
}

OperatorSpace preannihilator(const OperatorSpace& m) {
  require_square(m, "preannihilator");
  // tr(C A*) is the Frobenius pairing of vec(C) against vec(A), so the
  // solution space is the orthogonal complement of the vectorized span.
  return OperatorSpace::from_vec_span(m.h1(), m.h2(), ortho_complement(m.vec_span()));
}

OperatorSpace annihilator(const OperatorSpace& v) {
  require_square(v, "annihilator");
  return OperatorSpace::from_vec_span(v.h1(), v.h2(), ortho_complement(v.vec_span()));
}

OperatorSpace a_algebra(const OperatorSpace& m) {
  const std::size_t n1 = m.h1();
  const Matrix constraints = membership_constraints(m.vec_span());
  const Matrix eye = Matrix::identity(n1);
  std::vector<Matrix> blocks;
  blocks.reserve(m.dim());
  for (const auto& t : m.basis()) blocks.push_back(constraints * kron(eye, t));
  return OperatorSpace::from_vec_span(
      n1, n1, Subspace::span(n1 * n1, nullspace(vstack(blocks, n1 * n1))));
}

OperatorSpace b_algebra(const OperatorSpace& m) {
  const std::size_t n2 = m.h2();
  const Matrix constraints = membership_constraints(m.vec_span());
  const Matrix eye = Matrix::identity(n2);
  std::vector<Matrix> blocks;
  blocks.reserve(m.dim());
  for (const auto& t : m.basis()) blocks.push_back(constraints * kron(t.transpose(), eye));
  return OperatorSpace::from_vec_span(
      n2, n2, Subspace::span(n2 * n2, nullspace(vstack(blocks, n2 * n2))));
}

OperatorSpace commutant(const OperatorSpace& m) {
  require_square(m, "commutant");
  const std::size_t n = m.h1();
  const Matrix eye = Matrix::identity(n);
  std::vector<Matrix> blocks;
  blocks.reserve(m.dim());
  for (const auto& t : m.basis()) blocks.push_back(kron(eye, t) - kron(t.transpose(), eye));
  return OperatorSpace::from_vec_span(n, n, Subspace::span(n * n, nullspace(vstack(blocks, n * n))));
}

std::vector<Matrix> basis_completion(const OperatorSpace& sub, const OperatorSpace& sup) {
  if (sub.h1() != sup.h1() || sub.h2() != sup.h2()) throw std::invalid_argument("basis_completion: shape mismatch");
  Subspace cur = sub.vec_span();
  std::vector<Matrix> out;
  for (const auto& b : sup.basis()) {
    const Vector vb = vec(b);
    if (cur.contains(vb)) continue;
    out.push_back(b);
    cur = sum(cur, Subspace::span(cur.ambient(), {vb}));
  }
  return out;
}

Prop23Report check_prop23(const OperatorSpace& m, std::optional<bool> m_reflexive) {
  Prop23Report report;
  report.square = m.is_square();

  const OperatorSpace a_alg = a_algebra(m);
  const OperatorSpace b_alg = b_algebra(m);
  const OperatorSpace m_star = adjoint_space(m);

  report.adjoint_identity = adjoint_space(a_alg) == b_algebra(m_star);
  report.selfadjoint = m.is_square() && m_star == m;

  if (report.square) {
    // sigma-weak closedness is automatic at finite dimension, so the
    // annihilator identities apply to every square M.
    const OperatorSpace m_perp = preannihilator(m);
    // From tr(C (TA)*) = tr((T* C) A*) and tr(C (BT)*) = tr((C T*) B*): the
    // products pair M* with M_perp on opposite sides.
    report.annihilator_identity_a = a_alg == annihilator(product_span(m_star, m_perp));
    report.annihilator_identity_b = b_alg == annihilator(product_span(m_perp, m_star));
    if (report.selfadjoint) {
      report.selfadjoint_cstar = a_alg == b_alg && adjoint_space(a_alg) == a_alg;
      if (m_reflexive.has_value() && *m_reflexive)
        report.von_neumann = a_alg == commutant(commutant(a_alg));
    }
  }
  return report;
}

}  // namespace reflex
