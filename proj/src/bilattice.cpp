#include "reflex/bilattice.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace reflex {

namespace {

void require_pair_ambient(const ProjectionPair& pair, const OperatorSpace& m) {
  if (pair.p.ambient() != m.h1() || pair.q.ambient() != m.h2())
    throw std::invalid_argument("pair ambient mismatch");
}

// The subspace M P H1, the join of the generator images of p.
Subspace image_of_space(const OperatorSpace& m, const Subspace& p) {
  Subspace out = Subspace::zero(m.h2());
  for (const auto& t : m.basis()) out = sum(out, image(t, p));
  return out;
}

void validate_supplied(const std::vector<Subspace>& lat, std::size_t ambient, const GeneratorSet& gens,
                       const char* which) {
  const std::string name(which);
  const Subspace zero = Subspace::zero(ambient);
  const Subspace full = Subspace::full(ambient);
  if (std::find(lat.begin(), lat.end(), zero) == lat.end() || std::find(lat.begin(), lat.end(), full) == lat.end())
    throw std::invalid_argument("supplied lattice " + name + " must contain the zero and full subspaces");
  for (const auto& u : lat) {
    if (u.ambient() != ambient) throw std::invalid_argument("supplied lattice " + name + ": ambient mismatch");
    if (!is_invariant(u, gens))
      throw std::invalid_argument("supplied lattice " + name + ": element of dimension " +
                                  std::to_string(u.dim()) + " fails the invariance check");
  }
  for (const auto& u : lat)
    for (const auto& v : lat) {
      if (std::find(lat.begin(), lat.end(), sum(u, v)) == lat.end() ||
          std::find(lat.begin(), lat.end(), intersect(u, v)) == lat.end())
        throw std::invalid_argument("supplied lattice " + name + " is not closed under join/meet");
    }
}

GaussianRational random_small_scalar(std::mt19937_64& rng) {
  auto draw = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  mpq_class re(draw(-7, 7), draw(1, 7));
  mpq_class im(draw(-7, 7), draw(1, 7));
  re.canonicalize();
  im.canonicalize();
  return GaussianRational(re, im);
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& e : v) e = random_small_scalar(rng);
  return v;
}

}  // namespace

BilatticeContext BilatticeContext::make(const OperatorSpace& m) {
  BilatticeContext ctx{m, a_algebra(m), b_algebra(m), {}, {}};
  ctx.a_gens = GeneratorSet::from_space(ctx.a_alg);
  ctx.b_star_gens = GeneratorSet::adjoints_of(ctx.b_alg);
  return ctx;
}

bool annihilates(const ProjectionPair& pair, const OperatorSpace& m) {
  require_pair_ambient(pair, m);
  const Matrix p = projection_matrix(pair.p);
  const Matrix q = projection_matrix(pair.q);
  for (const auto& t : m.basis())
    if (!(q * t * p).is_zero()) return false;
  return true;
}

bool in_bilattice(const ProjectionPair& pair, const BilatticeContext& ctx) {
  return annihilates(pair, ctx.m) && is_invariant(pair.p, ctx.a_gens) && is_invariant(pair.q, ctx.b_star_gens);
}

Subspace phi(const Subspace& p, const BilatticeContext& ctx) {
  if (!is_invariant(p, ctx.a_gens)) throw std::domain_error("phi requires P invariant under A_M");
  // Q T P = 0 for all T means Q H2 inside (M P H1)^perp; the join of all
  // invariant subspaces in there is the largest one.
  const Subspace w = ortho_complement(image_of_space(ctx.m, p));
  return largest_invariant_within(ctx.b_star_gens, w);
}

Subspace theta(const Subspace& q, const BilatticeContext& ctx) {
  if (!is_invariant(q, ctx.b_star_gens)) throw std::domain_error("theta requires Q invariant under B_M^*");
  Subspace w = Subspace::full(ctx.m.h1());
  const Subspace ker_q = ortho_complement(q);
  for (const auto& t : ctx.m.basis()) w = intersect(w, preimage(t, ker_q));
  return largest_invariant_within(ctx.a_gens, w);
}

Subspace phi_by_join(const Subspace& p, const BilatticeContext& ctx, const std::vector<Subspace>& lat_b_perp) {
  if (!is_invariant(p, ctx.a_gens)) throw std::domain_error("phi requires P invariant under A_M");
  Subspace out = Subspace::zero(ctx.m.h2());
  for (const auto& q : lat_b_perp)
    if (annihilates({p, q}, ctx.m)) out = sum(out, q);
  return out;
}

Subspace theta_by_join(const Subspace& q, const BilatticeContext& ctx, const std::vector<Subspace>& lat_a) {
  if (!is_invariant(q, ctx.b_star_gens)) throw std::domain_error("theta requires Q invariant under B_M^*");
  Subspace out = Subspace::zero(ctx.m.h1());
  for (const auto& p : lat_a)
    if (annihilates({p, q}, ctx.m)) out = sum(out, p);
  return out;
}

ProjectionPair psi1(const ProjectionPair& pair, const BilatticeContext& ctx) {
  if (!in_bilattice(pair, ctx)) throw std::domain_error("psi1 requires a pair in Bil(M)");
  const Subspace fp = phi(pair.p, ctx);
  return {theta(fp, ctx), fp};
}

ProjectionPair psi2(const ProjectionPair& pair, const BilatticeContext& ctx) {
  if (!in_bilattice(pair, ctx)) throw std::domain_error("psi2 requires a pair in Bil(M)");
  const Subspace tq = theta(pair.q, ctx);
  return {tq, phi(tq, ctx)};
}

ProjectionPair enlarge(const ProjectionPair& pair, const BilatticeContext& ctx) {
  if (!annihilates(pair, ctx.m)) throw std::domain_error("enlarge requires an annihilating pair");
  return {smallest_invariant_containing(ctx.a_gens, pair.p),
          smallest_invariant_containing(ctx.b_star_gens, pair.q)};
}

OperatorSpace op_space_of(const std::vector<ProjectionPair>& pairs, std::size_t h1, std::size_t h2) {
  std::vector<Matrix> blocks;
  blocks.reserve(pairs.size());
  for (const auto& pair : pairs) {
    if (pair.p.ambient() != h1 || pair.q.ambient() != h2) throw std::invalid_argument("pair ambient mismatch");
    // vec(Q T P) = kron(P^t, Q) vec(T)
    blocks.push_back(kron(projection_matrix(pair.p).transpose(), projection_matrix(pair.q)));
  }
  return OperatorSpace::from_vec_span(h1, h2, Subspace::span(h1 * h2, nullspace(vstack(blocks, h1 * h2))));
}

bool coordinate_enumeration_applies(const BilatticeContext& ctx, std::size_t max_enum_dim) {
  if (ctx.m.h1() > max_enum_dim || ctx.m.h2() > max_enum_dim || ctx.m.h1() > 16 || ctx.m.h2() > 16) return false;
  return spans_diagonal_units(ctx.a_gens) && spans_diagonal_units(GeneratorSet::from_space(ctx.b_alg));
}

FiniteBilattice enumerate_bil(const BilatticeContext& ctx, std::size_t max_enum_dim,
                              const std::optional<SuppliedLattices>& supplied) {
  FiniteBilattice bil;
  if (supplied.has_value()) {
    validate_supplied(supplied->lat_a, ctx.m.h1(), ctx.a_gens, "Lat(A_M)");
    validate_supplied(supplied->lat_b_perp, ctx.m.h2(), ctx.b_star_gens, "Lat(B_M)^perp");
    bil.lat_a = supplied->lat_a;
    bil.lat_b_perp = supplied->lat_b_perp;
    auto canonical = [](const Subspace& a, const Subspace& b) { return Subspace::compare(a, b) < 0; };
    std::sort(bil.lat_a.begin(), bil.lat_a.end(), canonical);
    std::sort(bil.lat_b_perp.begin(), bil.lat_b_perp.end(), canonical);
    bil.lat_a.erase(std::unique(bil.lat_a.begin(), bil.lat_a.end()), bil.lat_a.end());
    bil.lat_b_perp.erase(std::unique(bil.lat_b_perp.begin(), bil.lat_b_perp.end()), bil.lat_b_perp.end());
    bil.caller_asserted = true;
  } else {
    if (!coordinate_enumeration_applies(ctx, max_enum_dim))
      throw std::domain_error(
          "bilattice enumeration needs diagonal-containing algebras within the dimension cap, "
          "or caller-supplied lattices");
    bil.lat_a = enumerate_coordinate_lat(ctx.a_gens, max_enum_dim);
    // B_M contains the diagonal iff B_M^* does, so the coordinate
    // enumeration of Lat(B_M^*) is complete as well.
    bil.lat_b_perp = enumerate_coordinate_lat(ctx.b_star_gens, max_enum_dim);
  }
  for (const auto& p : bil.lat_a)
    for (const auto& q : bil.lat_b_perp)
      if (annihilates({p, q}, ctx.m)) bil.pairs.push_back({p, q});
  return bil;
}

std::vector<ProjectionPair> sample_annihilating_pairs(const BilatticeContext& ctx, std::size_t count,
                                                      unsigned long long seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n1 = ctx.m.h1(), n2 = ctx.m.h2();
  std::vector<ProjectionPair> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::size_t k = rng() % (n1 + 1);
    std::vector<Vector> vecs;
    for (std::size_t j = 0; j < k; ++j) vecs.push_back(random_vector(rng, n1));
    const Subspace p = Subspace::span(n1, vecs);
    const Subspace w = ortho_complement(image_of_space(ctx.m, p));
    Subspace q = Subspace::zero(n2);
    if (!w.is_zero()) {
      const std::size_t kq = rng() % (w.dim() + 1);
      std::vector<Vector> qvecs;
      for (std::size_t j = 0; j < kq; ++j) {
        Vector combo(n2);
        for (const auto& b : w.basis()) {
          const GaussianRational c = random_small_scalar(rng);
          for (std::size_t t = 0; t < n2; ++t) combo[t] += c * b[t];
        }
        qvecs.push_back(std::move(combo));
      }
      q = Subspace::span(n2, qvecs);
    }
    out.push_back({p, q});
  }
  return out;
}

}  // namespace reflex
