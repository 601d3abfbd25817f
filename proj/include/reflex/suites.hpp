#pragma once

#include <string>
#include <vector>

#include "reflex/problem.hpp"

namespace reflex {

struct LawResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string detail;  // first counterexample, or the reason for a skip
};

struct SuiteReport {
  std::string suite;
  std::vector<LawResult> laws;
  bool all_pass() const;
};

// Suites: prop23 (bimodule and annihilator identities), prop33 (Galois
// laws), lemma31 (enlargement), cor34 (order preservation of the pair
// maps), theo35 (the characterization routes), all.
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const ProblemFile& problem, const std::string& suite, const AnalyzeOptions& options = {});

}  // namespace reflex
