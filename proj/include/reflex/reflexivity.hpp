#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reflex/bilattice.hpp"

namespace reflex {

// Deterministic stream of sample vectors for the pointwise membership
// condition "S x lies in M x". Structured vectors hit the degenerate rank
// strata; the random tail pins the generic stratum. Identical plans yield
// identical streams.
struct SamplePlan {
  unsigned long long seed = 42;
  std::size_t random_count = 100;
  bool basis_vectors = true;
  bool pairwise_sums = true;
  bool conjugate_mixes = true;
  std::vector<Vector> extra;

  std::vector<Vector> samples(std::size_t dim) const;
};

// Exact linear conditions on vec(S) expressing C_x S x = 0, where C_x
// projects onto (M x)^perp. Zero-row iff x = 0 or M x is the full space.
Matrix ref_constraints_at(const Vector& x, const OperatorSpace& m);

// Intersection of the pointwise constraints over the sample stream; always
// contains the reflexive cover of M, hence M. Shrinks (weakly) as samples
// are added. The sample list is generated up front and partitioned, so any
// thread count produces the identical canonical result.
OperatorSpace ref_upper_bound(const OperatorSpace& m, const SamplePlan& plan, unsigned threads = 1);

struct RefMembership {
  bool falsified = false;           // certified: s x outside M x for the witness
  std::optional<Vector> witness;
  std::size_t samples_checked = 0;
};

// One-sided oracle: a falsification is exact; survival only counts samples.
RefMembership ref_membership(const Matrix& s, const OperatorSpace& m, const SamplePlan& plan);

enum class VerdictStatus { kReflexiveExact, kNonReflexiveExact, kReflexiveCertifiedByDim, kInconclusiveUpperBound };
enum class DecisionPath { kDiagonalEnumeration, kSuppliedLattice, kSampling };

const char* to_string(VerdictStatus s);
const char* to_string(DecisionPath p);

struct WitnessScreen {
  Matrix candidate;
  RefMembership screen;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::kInconclusiveUpperBound;
  DecisionPath path = DecisionPath::kSampling;
  bool completeness_asserted_by_caller = false;
  OperatorSpace ref_space = OperatorSpace::zero(1, 1);  // exact Ref(M) on the enumeration paths, an upper bound otherwise
  std::vector<Matrix> witnesses;     // members of ref_space \ M (canonical completion order)
  std::vector<WitnessScreen> screening;  // sampling path: candidates re-screened pointwise
  std::size_t samples_used = 0;
  std::optional<FiniteBilattice> bilattice;
};

// Decision procedure. Exact path: op over the enumerated Bil(M) (sound and
// complete via the enlargement argument). Fallback: the sampling bound,
// which certifies reflexivity by dimension count or degrades to an
// inconclusive upper bound with screened candidate witnesses.
Verdict decide_reflexive(const OperatorSpace& m, const SamplePlan& plan,
                         const std::optional<SuppliedLattices>& supplied = {}, std::size_t max_enum_dim = 12,
                         unsigned threads = 1);

struct TheoremReport {
  OperatorSpace op_bil;      // op over the enumerated bilattice
  OperatorSpace space_psi;   // op over the psi-transformed pairs
  OperatorSpace space_theta; // op over {(theta(Q), Q)}
  OperatorSpace space_phi;   // op over {(P, phi(P))}
  bool psi_route_matches = false;
  bool theta_route_matches = false;
  bool phi_route_matches = false;
  bool consistent_with_verdict = false;
};

// The three equivalent characterizations evaluated on an enumerated
// bilattice; all must reproduce op(Bil), which equals M exactly when the
// verdict is reflexive-exact.
TheoremReport theorem_check(const OperatorSpace& m, const Verdict& verdict);

struct Remark11Report {
  OperatorSpace alg_lat;
  OperatorSpace ref_bound;
  bool alg_lat_equals_algebra = false;
  bool ref_bound_equals_algebra = false;
  bool routes_agree = false;            // alg_lat == ref_bound
  bool lattice_incomplete_detected = false;  // alg_lat not contained in the bound
  bool completeness_asserted = false;
};

// Compares Alg over a supplied invariant-subspace list against the sampling
// bound for a unital algebra. With a complete lattice both compute the
// reflexive cover; a strict gap certifies the supplied lattice incomplete.
Remark11Report remark11_check(const OperatorSpace& algebra, const std::vector<Subspace>& lattice,
                              const SamplePlan& plan, bool completeness_asserted);

struct Cor22Report {
  OperatorSpace a_m_bound;   // sampling bound for Ref(A_M)
  OperatorSpace a_of_ref;    // A over the decided ref_space
  bool bound_contained = false;
};

// One-sided containment check of Ref(A_M) inside A_{Ref(M)}, with Ref(A_M)
// replaced by its sampling bound and Ref(M) by the verdict's ref_space.
Cor22Report cor22_check(const OperatorSpace& m, const Verdict& verdict, const SamplePlan& plan);

}  // namespace reflex
