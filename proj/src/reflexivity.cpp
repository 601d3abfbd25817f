#include "reflex/reflexivity.hpp"

#include <future>
#include <random>
#include <stdexcept>

namespace reflex {

namespace {

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

bool vector_is_zero(const Vector& x) {
  for (const auto& e : x)
    if (!e.is_zero()) return false;
  return true;
}

// M x as a subspace of H2.
Subspace orbit(const OperatorSpace& m, const Vector& x) {
  std::vector<Vector> images;
  images.reserve(m.dim());
  for (const auto& t : m.basis()) images.push_back(mul(t, x));
  return Subspace::span(m.h2(), images);
}

Subspace constraint_kernel(const std::vector<Vector>& samples, const OperatorSpace& m) {
  std::vector<Matrix> blocks;
  blocks.reserve(samples.size());
  for (const auto& x : samples) blocks.push_back(ref_constraints_at(x, m));
  return Subspace::span(m.h1() * m.h2(), nullspace(vstack(blocks, m.h1() * m.h2())));
}

}  // namespace

std::vector<Vector> SamplePlan::samples(std::size_t dim) const {
  std::vector<Vector> out;
  auto e = [dim](std::size_t i) {
    Vector v(dim);
    v[i] = 1;
    return v;
  };
  if (basis_vectors)
    for (std::size_t i = 0; i < dim; ++i) out.push_back(e(i));
  if (pairwise_sums)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        Vector v = e(i);
        v[j] = 1;
        out.push_back(std::move(v));
      }
  if (conjugate_mixes)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        if (i == j) continue;
        Vector v = e(i);
        v[j] = GaussianRational::i();
        out.push_back(std::move(v));
      }
  for (const auto& v : extra) {
    if (v.size() != dim) throw std::invalid_argument("extra sample vector has wrong length");
    out.push_back(v);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < random_count; ++k) {
    Vector v(dim);
    for (auto& c : v) c = random_small_scalar(rng);
    out.push_back(std::move(v));
  }
  return out;
}

Matrix ref_constraints_at(const Vector& x, const OperatorSpace& m) {
  if (x.size() != m.h1()) throw std::invalid_argument("sample vector length mismatch");
  const std::size_t n1 = m.h1(), n2 = m.h2();
  if (vector_is_zero(x)) return Matrix(0, n1 * n2);
  const Subspace mx = orbit(m, x);
  if (mx.is_full()) return Matrix(0, n1 * n2);
  const Matrix cx = projection_matrix(ortho_complement(mx));
  // vec(C S x) = kron(x^t, C) vec(S)
  Matrix xt(1, n1);
  for (std::size_t j = 0; j < n1; ++j) xt(0, j) = x[j];
  return kron(xt, cx);
}

OperatorSpace ref_upper_bound(const OperatorSpace& m, const SamplePlan& plan, unsigned threads) {
  const std::vector<Vector> samples = plan.samples(m.h1());
  if (threads <= 1 || samples.size() < 2)
    return OperatorSpace::from_vec_span(m.h1(), m.h2(), constraint_kernel(samples, m));

  const std::size_t chunk = (samples.size() + threads - 1) / threads;
  std::vector<std::future<Subspace>> futures;
  for (std::size_t begin = 0; begin < samples.size(); begin += chunk) {
    const std::size_t end = std::min(begin + chunk, samples.size());
    std::vector<Vector> part(samples.begin() + begin, samples.begin() + end);
    futures.push_back(std::async(std::launch::async, [part = std::move(part), &m] {
      return constraint_kernel(part, m);
    }));
  }
  Subspace bound = Subspace::full(m.h1() * m.h2());
  for (auto& f : futures) bound = intersect(bound, f.get());
  return OperatorSpace::from_vec_span(m.h1(), m.h2(), bound);
}

RefMembership ref_membership(const Matrix& s, const OperatorSpace& m, const SamplePlan& plan) {
  if (s.rows() != m.h2() || s.cols() != m.h1()) throw std::invalid_argument("ref_membership: shape mismatch");
  RefMembership result;
  for (const auto& x : plan.samples(m.h1())) {
    ++result.samples_checked;
    if (!orbit(m, x).contains(mul(s, x))) {
      result.falsified = true;
      result.witness = x;
      return result;
    }
  }
  return result;
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kReflexiveExact: return "ReflexiveExact";
    case VerdictStatus::kNonReflexiveExact: return "NonReflexiveExact";
    case VerdictStatus::kReflexiveCertifiedByDim: return "ReflexiveCertifiedByDim";
    case VerdictStatus::kInconclusiveUpperBound: return "InconclusiveUpperBound";
  }
  return "?";
}

const char* to_string(DecisionPath p) {
  switch (p) {
    case DecisionPath::kDiagonalEnumeration: return "diagonal-enumeration";
    case DecisionPath::kSuppliedLattice: return "supplied-lattice";
    case DecisionPath::kSampling: return "sampling";
  }
  return "?";
}

Verdict decide_reflexive(const OperatorSpace& m, const SamplePlan& plan,
                         const std::optional<SuppliedLattices>& supplied, std::size_t max_enum_dim,
                         unsigned threads) {
  const BilatticeContext ctx = BilatticeContext::make(m);
  Verdict verdict;
  verdict.ref_space = m;

  const bool enumerable = supplied.has_value() || coordinate_enumeration_applies(ctx, max_enum_dim);
  if (enumerable) {
    verdict.bilattice = enumerate_bil(ctx, max_enum_dim, supplied);
    verdict.path = supplied.has_value() ? DecisionPath::kSuppliedLattice : DecisionPath::kDiagonalEnumeration;
    verdict.completeness_asserted_by_caller = verdict.bilattice->caller_asserted;
    verdict.ref_space = op_space_of(verdict.bilattice->pairs, m.h1(), m.h2());
    if (verdict.ref_space == m) {
      verdict.status = VerdictStatus::kReflexiveExact;
    } else {
      verdict.status = VerdictStatus::kNonReflexiveExact;
      verdict.witnesses = basis_completion(m, verdict.ref_space);
    }
    return verdict;
  }

  verdict.path = DecisionPath::kSampling;
  verdict.ref_space = ref_upper_bound(m, plan, threads);
  verdict.samples_used = plan.samples(m.h1()).size();
  if (verdict.ref_space.dim() == m.dim()) {
    // M <= Ref(M) <= bound with equal end dimensions pins all three.
    verdict.status = VerdictStatus::kReflexiveCertifiedByDim;
  } else {
    verdict.status = VerdictStatus::kInconclusiveUpperBound;
    verdict.witnesses = basis_completion(m, verdict.ref_space);
    for (const auto& candidate : verdict.witnesses)
      verdict.screening.push_back({candidate, ref_membership(candidate, m, plan)});
  }
  return verdict;
}

TheoremReport theorem_check(const OperatorSpace& m, const Verdict& verdict) {
  if (!verdict.bilattice.has_value())
    throw std::invalid_argument("theorem_check needs a verdict carrying an enumerated bilattice");
  const BilatticeContext ctx = BilatticeContext::make(m);
  const FiniteBilattice& bil = *verdict.bilattice;

  TheoremReport report{op_space_of(bil.pairs, m.h1(), m.h2()),
                       OperatorSpace::zero(m.h1(), m.h2()),
                       OperatorSpace::zero(m.h1(), m.h2()),
                       OperatorSpace::zero(m.h1(), m.h2())};

  std::vector<ProjectionPair> psi_pairs;
  psi_pairs.reserve(bil.pairs.size());
  for (const auto& pair : bil.pairs) psi_pairs.push_back(psi1(pair, ctx));
  report.space_psi = op_space_of(psi_pairs, m.h1(), m.h2());

  std::vector<ProjectionPair> theta_pairs;
  theta_pairs.reserve(bil.lat_b_perp.size());
  for (const auto& q : bil.lat_b_perp) theta_pairs.push_back({theta(q, ctx), q});
  report.space_theta = op_space_of(theta_pairs, m.h1(), m.h2());

  std::vector<ProjectionPair> phi_pairs;
  phi_pairs.reserve(bil.lat_a.size());
  for (const auto& p : bil.lat_a) phi_pairs.push_back({p, phi(p, ctx)});
  report.space_phi = op_space_of(phi_pairs, m.h1(), m.h2());

  report.psi_route_matches = report.space_psi == report.op_bil;
  report.theta_route_matches = report.space_theta == report.op_bil;
  report.phi_route_matches = report.space_phi == report.op_bil;

  const bool reflexive = verdict.status == VerdictStatus::kReflexiveExact;
  report.consistent_with_verdict =
      report.op_bil == verdict.ref_space &&
      (reflexive ? report.op_bil == m : (report.op_bil != m && space_leq(m, report.op_bil)));
  return report;
}

Remark11Report remark11_check(const OperatorSpace& algebra, const std::vector<Subspace>& lattice,
                              const SamplePlan& plan, bool completeness_asserted) {
  if (!algebra.is_square()) throw std::invalid_argument("remark11_check requires a square algebra");
  if (!membership(Matrix::identity(algebra.h1()), algebra))
    throw std::domain_error("remark11_check requires a unital algebra");
  const GeneratorSet gens = GeneratorSet::from_space(algebra);
  for (const auto& u : lattice)
    if (!is_invariant(u, gens)) throw std::domain_error("remark11_check: lattice element is not invariant");

  Remark11Report report{alg_of(algebra.h1(), lattice), ref_upper_bound(algebra, plan)};
  report.alg_lat_equals_algebra = report.alg_lat == algebra;
  report.ref_bound_equals_algebra = report.ref_bound == algebra;
  report.routes_agree = report.alg_lat == report.ref_bound;
  // Alg over a complete lattice equals the reflexive cover, which every
  // sampling bound contains; escaping the bound convicts the lattice.
  report.lattice_incomplete_detected = !space_leq(report.alg_lat, report.ref_bound);
  report.completeness_asserted = completeness_asserted;
  return report;
}

Cor22Report cor22_check(const OperatorSpace& m, const Verdict& verdict, const SamplePlan& plan) {
  Cor22Report report{ref_upper_bound(a_algebra(m), plan), a_algebra(verdict.ref_space)};
  report.bound_contained = space_leq(report.a_m_bound, report.a_of_ref);
  return report;
}

}  // namespace reflex
