#include "reflex/problem.hpp"

namespace reflex {

AnalyzeResult analyze(const ProblemFile& problem, const AnalyzeOptions& options) {
  const SamplePlan plan = options.plan_override.value_or(problem.plan);
  const OperatorSpace& m = problem.m;

  Verdict verdict = decide_reflexive(m, plan, problem.supplied, options.max_enum_dim, options.threads);

  std::optional<bool> reflexive;
  switch (verdict.status) {
    case VerdictStatus::kReflexiveExact:
    case VerdictStatus::kReflexiveCertifiedByDim:
      reflexive = true;
      break;
    case VerdictStatus::kNonReflexiveExact:
      reflexive = false;
      break;
    case VerdictStatus::kInconclusiveUpperBound:
      break;
  }

  AnalyzeResult result{m, a_algebra(m), b_algebra(m), check_prop23(m, reflexive), std::move(verdict), {}, plan};
  if (result.verdict.bilattice.has_value()) result.theorem35 = theorem_check(m, result.verdict);
  return result;
}

}  // namespace reflex
