#pragma once

#include <string>

#include <json.hpp>

#include "reflex/problem.hpp"
#include "reflex/suites.hpp"

namespace reflex {

using json = nlohmann::json;

// Matrices serialize as row lists of scalar strings; subspaces as lists of
// basis vectors. Scalar strings keep exactness through serialization, and
// sorted object keys plus canonical bases make reports byte-reproducible.

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

json to_json(const Subspace& u);
// Accepts a list of vectors (each a list of scalar strings or an "e1+e2"
// style shorthand) or the named shorthands "zero", "full", "e1".."en".
Subspace subspace_from_json(const json& j, std::size_t ambient);
Subspace parse_subspace_text(const std::string& text, std::size_t ambient);

json to_json(const OperatorSpace& m);

json to_json(const SamplePlan& plan);
json to_json(const Prop23Report& report);
json to_json(const Verdict& verdict);
json to_json(const TheoremReport& report);
json to_json(const Remark11Report& report);
json to_json(const FiniteBilattice& bil);
json to_json(const AnalyzeResult& result);
json to_json(const SuiteReport& report);

ProblemFile problem_from_json(const json& j);
ProblemFile load_problem_file(const std::string& path);

std::string render_report(const json& j);  // dump with stable two-space indent

}  // namespace reflex
