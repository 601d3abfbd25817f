#include <doctest.h>

#include "helpers.hpp"
#include "reflex/fixtures.hpp"
#include "reflex/reflexivity.hpp"

using namespace reflex;
using reflex::testing::q;

namespace {

const Matrix kE11 = Matrix::unit(2, 2, 0, 0);
const Matrix kE12 = Matrix::unit(2, 2, 0, 1);
const Matrix kE21 = Matrix::unit(2, 2, 1, 0);

SamplePlan structured_only() {
  SamplePlan plan;
  plan.random_count = 0;
  return plan;
}

}  // namespace

TEST_CASE("pointwise constraint blocks") {
  const OperatorSpace jordan = OperatorSpace::span(2, 2, {Matrix::identity(2), kE12});
  CHECK(ref_constraints_at(Vector{q(0), q(0)}, jordan).rows() == 0);
  CHECK(ref_constraints_at(Vector{q(1), q(0)}, OperatorSpace::full(2, 2)).rows() == 0);

  // M e1 = span{e1}: the block forces the (2,1) entry of S to vanish.
  const Matrix block = ref_constraints_at(Vector{q(1), q(0)}, jordan);
  REQUIRE(block.rows() == 2);
  const auto kernel = nullspace(block);
  CHECK(kernel.size() == 3);
  const OperatorSpace sol = OperatorSpace::from_vec_span(2, 2, Subspace::span(4, kernel));
  CHECK_FALSE(membership(kE21, sol));
  CHECK(membership(kE11, sol));
}

TEST_CASE("sampling bound on the shipped fixtures") {
  const SamplePlan plan;
  const OperatorSpace full = OperatorSpace::full(2, 2);
  CHECK(ref_upper_bound(full, plan) == full);

  const OperatorSpace jordan = OperatorSpace::span(2, 2, {Matrix::identity(2), kE12});
  const OperatorSpace upper2 = OperatorSpace::span(2, 2, {kE11, kE12, Matrix::unit(2, 2, 1, 1)});
  CHECK(ref_upper_bound(jordan, plan) == upper2);

  // scalars pin down to dimension 1 with the structured vectors alone
  const OperatorSpace scalars = OperatorSpace::span(2, 2, {Matrix::identity(2)});
  CHECK(ref_upper_bound(scalars, structured_only()) == scalars);
}

TEST_CASE("bound contains M and shrinks with more samples") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 8; ++k) {
    const OperatorSpace m = reflex::testing::random_operator_space(rng, 2 + k % 2, 2 + k % 3);
    SamplePlan small = structured_only();
    small.random_count = 3;
    SamplePlan large = small;
    large.random_count = 25;  // same seed: the small stream is a prefix
    const OperatorSpace bound_small = ref_upper_bound(m, small);
    const OperatorSpace bound_large = ref_upper_bound(m, large);
    CHECK(space_leq(m, bound_large));
    CHECK(space_leq(bound_large, bound_small));
  }
}

TEST_CASE("parallel and serial bounds agree") {
  const OperatorSpace jordan = OperatorSpace::span(2, 2, {Matrix::identity(2), kE12});
  const SamplePlan plan;
  CHECK(ref_upper_bound(jordan, plan, 1) == ref_upper_bound(jordan, plan, 4));
}

TEST_CASE("pointwise membership oracle") {
  const OperatorSpace jordan = OperatorSpace::span(2, 2, {Matrix::identity(2), kE12});
  const SamplePlan plan;
  for (const auto& t : jordan.basis()) CHECK_FALSE(ref_membership(t, jordan, plan).falsified);

  CHECK_FALSE(ref_membership(kE11, jordan, plan).falsified);  // E11 lies in Ref(M)

  const RefMembership out = ref_membership(kE21, jordan, plan);
  REQUIRE(out.falsified);
  CHECK(out.witness.value() == Vector{q(1), q(0)});  // E21 e1 = e2 escapes span{e1}
}

TEST_CASE("decision procedure on the fixtures") {
  const SamplePlan plan;

  const Verdict unit = decide_reflexive(fixture("unit-e12").m, plan);
  CHECK(unit.status == VerdictStatus::kReflexiveExact);
  CHECK(unit.path == DecisionPath::kDiagonalEnumeration);
  CHECK(unit.ref_space == fixture("unit-e12").m);

  const Verdict zero = decide_reflexive(fixture("zero").m, plan);
  CHECK(zero.status == VerdictStatus::kReflexiveExact);
  CHECK(zero.ref_space == OperatorSpace::zero(2, 2));

  const ProblemFile jordan = fixture("jordan");
  const Verdict nonreflexive = decide_reflexive(jordan.m, plan, jordan.supplied);
  CHECK(nonreflexive.status == VerdictStatus::kNonReflexiveExact);
  CHECK(nonreflexive.path == DecisionPath::kSuppliedLattice);
  CHECK(nonreflexive.completeness_asserted_by_caller);
  CHECK(nonreflexive.ref_space.dim() == 3);
  REQUIRE(nonreflexive.witnesses.size() == 1);
  CHECK(nonreflexive.witnesses[0] == kE11);
  for (const auto& w : nonreflexive.witnesses) {
    CHECK(membership(w, nonreflexive.ref_space));
    CHECK_FALSE(membership(w, jordan.m));
  }

  const Verdict scalars = decide_reflexive(fixture("scalars").m, plan);
  CHECK(scalars.status == VerdictStatus::kReflexiveCertifiedByDim);
  CHECK(scalars.path == DecisionPath::kSampling);
  CHECK(scalars.ref_space == fixture("scalars").m);

  for (const char* name : {"full", "diag2", "uppertri3", "strict-upper3"}) {
    const Verdict v = decide_reflexive(fixture(name).m, plan);
    CHECK(v.status == VerdictStatus::kReflexiveExact);
    CHECK(v.ref_space == fixture(name).m);
  }
}

TEST_CASE("an inconclusive verdict screens its candidates") {
  // The jordan space without supplied lattices falls back to sampling; the
  // bound is the upper-triangular algebra, one dimension above M.
  const ProblemFile jordan = fixture("jordan");
  const Verdict v = decide_reflexive(jordan.m, jordan.plan);
  CHECK(v.status == VerdictStatus::kInconclusiveUpperBound);
  CHECK(v.path == DecisionPath::kSampling);
  CHECK(v.ref_space.dim() == 3);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0] == kE11);
  REQUIRE(v.screening.size() == 1);
  CHECK_FALSE(v.screening[0].screen.falsified);  // E11 really lies in Ref(M)
}

TEST_CASE("characterization routes on fixtures") {
  const SamplePlan plan;
  for (const char* name : {"zero", "full", "unit-e12", "diag2", "uppertri3", "strict-upper3"}) {
    const ProblemFile problem = fixture(name);
    const Verdict v = decide_reflexive(problem.m, plan);
    const TheoremReport report = theorem_check(problem.m, v);
    CHECK(report.psi_route_matches);
    CHECK(report.theta_route_matches);
    CHECK(report.phi_route_matches);
    CHECK(report.consistent_with_verdict);
    CHECK(report.op_bil == problem.m);
  }

  const ProblemFile jordan = fixture("jordan");
  const Verdict v = decide_reflexive(jordan.m, plan, jordan.supplied);
  const TheoremReport report = theorem_check(jordan.m, v);
  CHECK(report.psi_route_matches);
  CHECK(report.theta_route_matches);
  CHECK(report.phi_route_matches);
  CHECK(report.consistent_with_verdict);
  CHECK(report.op_bil.dim() == 3);
  CHECK(report.op_bil != jordan.m);
}

TEST_CASE("AlgLat against the sampling bound") {
  const SamplePlan plan;
  // upper-triangular algebra with its complete three-element lattice
  const OperatorSpace upper2 = OperatorSpace::span(2, 2, {kE11, kE12, Matrix::unit(2, 2, 1, 1)});
  const std::vector<Subspace> nest{Subspace::zero(2), Subspace::coordinate(2, 0b01), Subspace::full(2)};
  const Remark11Report upper_report = remark11_check(upper2, nest, plan, true);
  CHECK(upper_report.alg_lat_equals_algebra);
  CHECK(upper_report.ref_bound_equals_algebra);
  CHECK(upper_report.routes_agree);
  CHECK_FALSE(upper_report.lattice_incomplete_detected);

  const Remark11Report full_report =
      remark11_check(OperatorSpace::full(2, 2), {Subspace::zero(2), Subspace::full(2)}, plan, true);
  CHECK(full_report.alg_lat_equals_algebra);
  CHECK(full_report.ref_bound_equals_algebra);

  // the scalars over {0, full}: AlgLat is everything, the bound is the
  // scalars; the gap flags the supplied lattice as incomplete
  const OperatorSpace scalars = OperatorSpace::span(2, 2, {Matrix::identity(2)});
  const Remark11Report scalar_report =
      remark11_check(scalars, {Subspace::zero(2), Subspace::full(2)}, plan, false);
  CHECK(scalar_report.alg_lat == OperatorSpace::full(2, 2));
  CHECK(scalar_report.ref_bound == scalars);
  CHECK_FALSE(scalar_report.alg_lat_equals_algebra);
  CHECK(scalar_report.lattice_incomplete_detected);

  CHECK_THROWS_AS(remark11_check(OperatorSpace::span(2, 2, {kE12}), {}, plan, false), std::domain_error);
}

TEST_CASE("containment of the algebra bound in the algebra of the cover") {
  const SamplePlan plan;
  for (const char* name : {"unit-e12", "diag2", "uppertri3"}) {
    const ProblemFile problem = fixture(name);
    const Verdict v = decide_reflexive(problem.m, plan);
    CHECK(cor22_check(problem.m, v, plan).bound_contained);
  }
  const ProblemFile jordan = fixture("jordan");
  const Verdict v = decide_reflexive(jordan.m, plan, jordan.supplied);
  CHECK(cor22_check(jordan.m, v, plan).bound_contained);
}

TEST_CASE("rectangular decision") {
  const OperatorSpace m = OperatorSpace::span(3, 2, {Matrix::unit(2, 3, 0, 0)});
  const Verdict v = decide_reflexive(m, SamplePlan{});
  CHECK(v.status == VerdictStatus::kReflexiveExact);
  CHECK(v.ref_space == m);
  const TheoremReport report = theorem_check(m, v);
  CHECK(report.psi_route_matches);
  CHECK(report.theta_route_matches);
  CHECK(report.phi_route_matches);
}
