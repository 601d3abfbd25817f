#include "reflex/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "reflex/json_io.hpp"

namespace reflex {

namespace {

constexpr std::size_t kEnlargeSamples = 200;

std::string subspace_detail(const char* label, const Subspace& u) {
  return std::string(label) + "=" + to_json(u).dump();
}

LawResult skipped(const std::string& name, const std::string& why) { return {name, true, true, why}; }

void check_prop23_laws(const ProblemFile& problem, const Verdict& verdict, std::vector<LawResult>& laws) {
  const OperatorSpace& m = problem.m;
  const OperatorSpace a_alg = a_algebra(m);
  const OperatorSpace b_alg = b_algebra(m);

  std::optional<bool> reflexive;
  if (verdict.status == VerdictStatus::kReflexiveExact || verdict.status == VerdictStatus::kReflexiveCertifiedByDim)
    reflexive = true;
  else if (verdict.status == VerdictStatus::kNonReflexiveExact)
    reflexive = false;
  const Prop23Report report = check_prop23(m, reflexive);

  laws.push_back({"adjoint-identity", report.adjoint_identity, false, ""});
  if (report.square) {
    laws.push_back({"annihilator-identity-a", *report.annihilator_identity_a, false, ""});
    laws.push_back({"annihilator-identity-b", *report.annihilator_identity_b, false, ""});
    laws.push_back({"biduality", annihilator(preannihilator(m)) == m, false, ""});
  } else {
    laws.push_back(skipped("annihilator-identity-a", "rectangular context"));
    laws.push_back(skipped("annihilator-identity-b", "rectangular context"));
    laws.push_back(skipped("biduality", "rectangular context"));
  }

  LawResult unital{"algebra-unital-and-closed", true, false, ""};
  if (!membership(Matrix::identity(m.h1()), a_alg)) unital = {unital.name, false, false, "identity missing from A_M"};
  if (unital.pass && !membership(Matrix::identity(m.h2()), b_alg))
    unital = {unital.name, false, false, "identity missing from B_M"};
  if (unital.pass)
    for (const auto& x : a_alg.basis())
      for (const auto& y : a_alg.basis())
        if (!membership(x * y, a_alg)) {
          unital = {unital.name, false, false, "A_M not closed under products"};
          goto unital_done;
        }
  if (unital.pass)
    for (const auto& x : b_alg.basis())
      for (const auto& y : b_alg.basis())
        if (!membership(x * y, b_alg)) {
          unital = {unital.name, false, false, "B_M not closed under products"};
          goto unital_done;
        }
unital_done:
  laws.push_back(std::move(unital));

  LawResult bimodule{"bimodule-law", true, false, ""};
  for (const auto& b : b_alg.basis())
    for (const auto& t : m.basis())
      for (const auto& a : a_alg.basis())
        if (!membership(b * t * a, m)) {
          bimodule.pass = false;
          bimodule.detail = "B T A escapes M";
          goto bimodule_done;
        }
bimodule_done:
  laws.push_back(std::move(bimodule));

  if (report.square && report.selfadjoint)
    laws.push_back({"cstar-when-selfadjoint", *report.selfadjoint_cstar, false, ""});
  else
    laws.push_back(skipped("cstar-when-selfadjoint", "M is not a selfadjoint square space"));
  if (report.von_neumann.has_value())
    laws.push_back({"von-neumann-when-reflexive", *report.von_neumann, false, ""});
  else
    laws.push_back(skipped("von-neumann-when-reflexive", "needs a selfadjoint M decided reflexive"));
}

void check_prop33_laws(const BilatticeContext& ctx, const FiniteBilattice& bil, std::vector<LawResult>& laws) {
  std::vector<Subspace> phi_of(bil.lat_a.size(), Subspace::zero(ctx.m.h2()));
  std::vector<Subspace> theta_of(bil.lat_b_perp.size(), Subspace::zero(ctx.m.h1()));
  for (std::size_t i = 0; i < bil.lat_a.size(); ++i) phi_of[i] = phi(bil.lat_a[i], ctx);
  for (std::size_t i = 0; i < bil.lat_b_perp.size(); ++i) theta_of[i] = theta(bil.lat_b_perp[i], ctx);

  LawResult antitone_phi{"antitone-phi", true, false, ""};
  for (std::size_t i = 0; i < bil.lat_a.size() && antitone_phi.pass; ++i)
    for (std::size_t j = 0; j < bil.lat_a.size(); ++j)
      if (leq(bil.lat_a[i], bil.lat_a[j]) && !leq(phi_of[j], phi_of[i])) {
        antitone_phi = {antitone_phi.name, false, false, subspace_detail("p1", bil.lat_a[i]) + " " + subspace_detail("p2", bil.lat_a[j])};
        break;
      }
  laws.push_back(std::move(antitone_phi));

  LawResult antitone_theta{"antitone-theta", true, false, ""};
  for (std::size_t i = 0; i < bil.lat_b_perp.size() && antitone_theta.pass; ++i)
    for (std::size_t j = 0; j < bil.lat_b_perp.size(); ++j)
      if (leq(bil.lat_b_perp[i], bil.lat_b_perp[j]) && !leq(theta_of[j], theta_of[i])) {
        antitone_theta = {antitone_theta.name, false, false, subspace_detail("q1", bil.lat_b_perp[i]) + " " + subspace_detail("q2", bil.lat_b_perp[j])};
        break;
      }
  laws.push_back(std::move(antitone_theta));

  LawResult gluing{"gluing", true, false, ""};
  for (std::size_t i = 0; i < bil.lat_a.size() && gluing.pass; ++i)
    if (!in_bilattice({bil.lat_a[i], phi_of[i]}, ctx))
      gluing = {gluing.name, false, false, subspace_detail("p", bil.lat_a[i])};
  for (std::size_t i = 0; i < bil.lat_b_perp.size() && gluing.pass; ++i)
    if (!in_bilattice({theta_of[i], bil.lat_b_perp[i]}, ctx))
      gluing = {gluing.name, false, false, subspace_detail("q", bil.lat_b_perp[i])};
  laws.push_back(std::move(gluing));

  // phi(vee C) = wedge phi(C) over subsets of size up to 3, and dually.
  auto join_reversal = [](const std::vector<Subspace>& lat, const std::vector<Subspace>& mapped,
                          auto&& apply, std::size_t domain_ambient, std::size_t range_ambient,
                          const char* name) {
    LawResult law{name, true, false, ""};
    const std::size_t n = lat.size();
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t i = 0; i < n; ++i) {
      subsets.push_back({i});
      for (std::size_t j = i + 1; j < n; ++j) {
        subsets.push_back({i, j});
        for (std::size_t k = j + 1; k < n; ++k) subsets.push_back({i, j, k});
      }
    }
    for (const auto& subset : subsets) {
      Subspace join = Subspace::zero(domain_ambient);
      Subspace meet = Subspace::full(range_ambient);
      for (std::size_t idx : subset) {
        join = sum(join, lat[idx]);
        meet = intersect(meet, mapped[idx]);
      }
      if (apply(join) != meet) {
        law.pass = false;
        law.detail = "subset size " + std::to_string(subset.size());
        break;
      }
    }
    return law;
  };
  laws.push_back(join_reversal(bil.lat_a, phi_of, [&ctx](const Subspace& p) { return phi(p, ctx); },
                               ctx.m.h1(), ctx.m.h2(), "join-reversal-phi"));
  laws.push_back(join_reversal(bil.lat_b_perp, theta_of, [&ctx](const Subspace& q) { return theta(q, ctx); },
                               ctx.m.h2(), ctx.m.h1(), "join-reversal-theta"));

  LawResult inflation{"inflation", true, false, ""};
  for (std::size_t i = 0; i < bil.lat_a.size() && inflation.pass; ++i)
    if (!leq(bil.lat_a[i], theta(phi_of[i], ctx)))
      inflation = {inflation.name, false, false, subspace_detail("p", bil.lat_a[i])};
  for (std::size_t i = 0; i < bil.lat_b_perp.size() && inflation.pass; ++i)
    if (!leq(bil.lat_b_perp[i], phi(theta_of[i], ctx)))
      inflation = {inflation.name, false, false, subspace_detail("q", bil.lat_b_perp[i])};
  laws.push_back(std::move(inflation));

  LawResult triple{"triple-composition", true, false, ""};
  for (std::size_t i = 0; i < bil.lat_a.size() && triple.pass; ++i)
    if (phi(theta(phi_of[i], ctx), ctx) != phi_of[i])
      triple = {triple.name, false, false, subspace_detail("p", bil.lat_a[i])};
  for (std::size_t i = 0; i < bil.lat_b_perp.size() && triple.pass; ++i)
    if (theta(phi(theta_of[i], ctx), ctx) != theta_of[i])
      triple = {triple.name, false, false, subspace_detail("q", bil.lat_b_perp[i])};
  laws.push_back(std::move(triple));
}

void check_lemma31_laws(const BilatticeContext& ctx, unsigned long long seed, std::vector<LawResult>& laws) {
  LawResult law{"enlarge-dominates-into-bil", true, false, ""};
  for (const auto& pair : sample_annihilating_pairs(ctx, kEnlargeSamples, seed)) {
    const ProjectionPair big = enlarge(pair, ctx);
    if (!leq(pair.p, big.p) || !leq(pair.q, big.q) || !in_bilattice(big, ctx)) {
      law.pass = false;
      law.detail = subspace_detail("p", pair.p) + " " + subspace_detail("q", pair.q);
      break;
    }
  }
  laws.push_back(std::move(law));
}

void check_cor34_laws(const BilatticeContext& ctx, const FiniteBilattice& bil, std::vector<LawResult>& laws) {
  std::vector<ProjectionPair> images1, images2;
  images1.reserve(bil.pairs.size());
  images2.reserve(bil.pairs.size());
  for (const auto& pair : bil.pairs) {
    images1.push_back(psi1(pair, ctx));
    images2.push_back(psi2(pair, ctx));
  }

  LawResult order1{"psi1-order-preserving", true, false, ""};
  LawResult order2{"psi2-order-preserving", true, false, ""};
  for (std::size_t i = 0; i < bil.pairs.size(); ++i)
    for (std::size_t j = 0; j < bil.pairs.size(); ++j) {
      if (!pair_leq(bil.pairs[i], bil.pairs[j])) continue;
      if (order1.pass && !pair_leq(images1[i], images1[j]))
        order1 = {order1.name, false, false, "pair indices " + std::to_string(i) + "," + std::to_string(j)};
      if (order2.pass && !pair_leq(images2[i], images2[j]))
        order2 = {order2.name, false, false, "pair indices " + std::to_string(i) + "," + std::to_string(j)};
    }
  laws.push_back(std::move(order1));
  laws.push_back(std::move(order2));

  auto canonical_set = [](std::vector<ProjectionPair> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const ProjectionPair& a, const ProjectionPair& b) { return ProjectionPair::compare(a, b) < 0; });
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
  };
  laws.push_back({"psi-images-coincide", canonical_set(images1) == canonical_set(images2), false, ""});
}

void check_theo35_laws(const ProblemFile& problem, const Verdict& verdict, std::vector<LawResult>& laws) {
  const TheoremReport report = theorem_check(problem.m, verdict);
  laws.push_back({"characterization-psi-pairs", report.psi_route_matches, false, ""});
  laws.push_back({"characterization-theta-route", report.theta_route_matches, false, ""});
  laws.push_back({"characterization-phi-route", report.phi_route_matches, false, ""});
  laws.push_back({"verdict-consistency", report.consistent_with_verdict, false, ""});
}

}  // namespace

bool SuiteReport::all_pass() const {
  for (const auto& law : laws)
    if (!law.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"prop23", "prop33", "lemma31", "cor34", "theo35", "all"};
  return names;
}

SuiteReport run_suite(const ProblemFile& problem, const std::string& suite, const AnalyzeOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");

  const SamplePlan plan = options.plan_override.value_or(problem.plan);
  const BilatticeContext ctx = BilatticeContext::make(problem.m);
  const Verdict verdict = decide_reflexive(problem.m, plan, problem.supplied, options.max_enum_dim, options.threads);

  SuiteReport report{suite, {}};
  const bool want_all = suite == "all";
  const std::string no_bil = "no enumerable bilattice for this problem";

  if (want_all || suite == "prop23") check_prop23_laws(problem, verdict, report.laws);
  if (want_all || suite == "prop33") {
    if (verdict.bilattice.has_value())
      check_prop33_laws(ctx, *verdict.bilattice, report.laws);
    else
      report.laws.push_back(skipped("prop33", no_bil));
  }
  if (want_all || suite == "lemma31") check_lemma31_laws(ctx, plan.seed, report.laws);
  if (want_all || suite == "cor34") {
    if (verdict.bilattice.has_value())
      check_cor34_laws(ctx, *verdict.bilattice, report.laws);
    else
      report.laws.push_back(skipped("cor34", no_bil));
  }
  if (want_all || suite == "theo35") {
    if (verdict.bilattice.has_value())
      check_theo35_laws(problem, verdict, report.laws);
    else
      report.laws.push_back(skipped("theo35", no_bil));
  }
  return report;
}

}  // namespace reflex
