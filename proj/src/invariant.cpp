#include "reflex/invariant.hpp"

#include <stdexcept>

namespace reflex {

namespace {

void require_ambient(const Subspace& w, const GeneratorSet& g) {
  if (w.ambient() != g.ambient) throw std::invalid_argument("ambient dimension mismatch");
}

}  // namespace

GeneratorSet GeneratorSet::from_space(const OperatorSpace& algebra) {
  if (!algebra.is_square()) throw std::invalid_argument("generator set requires square operators");
  return {algebra.h1(), algebra.basis()};
}

GeneratorSet GeneratorSet::adjoints_of(const OperatorSpace& algebra) {
  if (!algebra.is_square()) throw std::invalid_argument("generator set requires square operators");
  std::vector<Matrix> gens;
  gens.reserve(algebra.dim());
  for (const auto& t : algebra.basis()) gens.push_back(t.adjoint());
  return {algebra.h1(), std::move(gens)};
}

bool is_invariant(const Subspace& w, const GeneratorSet& g) {
  require_ambient(w, g);
  for (const auto& t : g.generators)
    if (!leq(image(t, w), w)) return false;
  return true;
}

Subspace smallest_invariant_containing(const GeneratorSet& g, const Subspace& w) {
  require_ambient(w, g);
  Subspace cur = w;
  for (;;) {
    Subspace next = cur;
    for (const auto& t : g.generators) next = sum(next, image(t, cur));
    if (next == cur) return cur;
    cur = next;
  }
}

Subspace largest_invariant_within(const GeneratorSet& g, const Subspace& w) {
  require_ambient(w, g);
  Subspace cur = w;
  for (;;) {
    Subspace next = cur;
    for (const auto& t : g.generators) next = intersect(next, preimage(t, cur));
    if (next == cur) return cur;
    cur = next;
  }
}

OperatorSpace alg_of(std::size_t ambient, const std::vector<Subspace>& f) {
  const Matrix eye = Matrix::identity(ambient);
  std::vector<Matrix> blocks;
  blocks.reserve(f.size());
  for (const auto& u : f) {
    if (u.ambient() != ambient) throw std::invalid_argument("ambient dimension mismatch");
    const Matrix p = projection_matrix(u);
    blocks.push_back(kron(p.transpose(), eye - p));  // vec((I-P) T P)
  }
  return OperatorSpace::from_vec_span(
      ambient, ambient, Subspace::span(ambient * ambient, nullspace(vstack(blocks, ambient * ambient))));
}

bool spans_diagonal_units(const GeneratorSet& g) {
  const OperatorSpace span = OperatorSpace::span(g.ambient, g.ambient, g.generators);
  for (std::size_t i = 0; i < g.ambient; ++i)
    if (!membership(Matrix::unit(g.ambient, g.ambient, i, i), span)) return false;
  return true;
}

std::vector<Subspace> enumerate_coordinate_lat(const GeneratorSet& g, std::size_t max_enum_dim) {
  if (g.ambient > max_enum_dim || g.ambient > 16)
    throw std::domain_error("coordinate enumeration dimension cap exceeded");
  if (!spans_diagonal_units(g))
    throw std::domain_error("coordinate enumeration requires the diagonal matrix units in the span");
  std::vector<Subspace> lat;
  const std::uint32_t limit = std::uint32_t(1) << g.ambient;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    Subspace candidate = Subspace::coordinate(g.ambient, mask);
    if (is_invariant(candidate, g)) lat.push_back(std::move(candidate));
  }
  return lat;
}

}  // namespace reflex
