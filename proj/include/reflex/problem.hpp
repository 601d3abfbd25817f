#pragma once

#include <optional>

#include "reflex/reflexivity.hpp"

namespace reflex {

// A batch problem: the operator space plus optional caller-supplied
// invariant-subspace lattices and sampling overrides.
struct ProblemFile {
  OperatorSpace m = OperatorSpace::zero(1, 1);
  std::optional<SuppliedLattices> supplied;
  SamplePlan plan;
};

struct AnalyzeOptions {
  std::size_t max_enum_dim = 12;
  unsigned threads = 1;
  std::optional<SamplePlan> plan_override;
};

struct AnalyzeResult {
  OperatorSpace m;
  OperatorSpace a_alg;
  OperatorSpace b_alg;
  Prop23Report prop23;
  Verdict verdict;
  std::optional<TheoremReport> theorem35;
  SamplePlan plan;
};

// The full pipeline: bimodule algebras, the structural report, the
// reflexivity verdict, and the characterization cross-check when an
// enumerated bilattice is available.
AnalyzeResult analyze(const ProblemFile& problem, const AnalyzeOptions& options = {});

}  // namespace reflex
