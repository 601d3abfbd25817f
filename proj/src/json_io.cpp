#include "reflex/json_io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace reflex {

namespace {

json scalar_rows(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.str());
  return out;
}

Vector vector_from_json(const json& j, std::size_t length) {
  if (!j.is_array() || j.size() != length) throw std::invalid_argument("vector must be a list of " + std::to_string(length) + " scalar strings");
  Vector v(length);
  for (std::size_t k = 0; k < length; ++k) {
    if (!j[k].is_string()) throw std::invalid_argument("vector entries must be scalar strings");
    v[k] = GaussianRational::parse(j[k].get<std::string>());
  }
  return v;
}

// "e1", "e2+e5", ... one vector as a sum of standard coordinates.
Vector coordinate_sum(const std::string& text, std::size_t ambient) {
  Vector v(ambient);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('+', pos);
    if (next == std::string::npos) next = text.size();
    const std::string tok = text.substr(pos, next - pos);
    if (tok.size() < 2 || tok[0] != 'e' ||
        tok.find_first_not_of("0123456789", 1) != std::string::npos)
      throw std::invalid_argument("bad coordinate shorthand '" + text + "'");
    const unsigned long idx = std::stoul(tok.substr(1));
    if (idx < 1 || idx > ambient) throw std::invalid_argument("coordinate index out of range in '" + text + "'");
    v[idx - 1] += 1;
    pos = next + 1;
  }
  return v;
}

json optional_bool(const std::optional<bool>& b) { return b.has_value() ? json(*b) : json(nullptr); }

json pair_to_json(const ProjectionPair& pair) { return json::array({to_json(pair.p), to_json(pair.q)}); }

json space_summary(const OperatorSpace& m) {
  json out;
  out["dim"] = m.dim();
  json basis = json::array();
  for (const auto& t : m.basis()) basis.push_back(scalar_rows(t));
  out["basis"] = std::move(basis);
  return out;
}

}  // namespace

json to_json(const Matrix& m) { return scalar_rows(m); }

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw std::invalid_argument("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector row = vector_from_json(j[i], cols);
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = row[k];
  }
  return m;
}

json to_json(const Subspace& u) {
  json out = json::array();
  for (const auto& b : u.basis()) out.push_back(vector_to_json(b));
  return out;
}

Subspace subspace_from_json(const json& j, std::size_t ambient) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "zero") return Subspace::zero(ambient);
    if (s == "full") return Subspace::full(ambient);
    return Subspace::span(ambient, {coordinate_sum(s, ambient)});
  }
  if (!j.is_array()) throw std::invalid_argument("subspace must be a shorthand string or a list of vectors");
  std::vector<Vector> vectors;
  for (const auto& item : j) {
    if (item.is_string())
      vectors.push_back(coordinate_sum(item.get<std::string>(), ambient));
    else
      vectors.push_back(vector_from_json(item, ambient));
  }
  return Subspace::span(ambient, vectors);
}

Subspace parse_subspace_text(const std::string& text, std::size_t ambient) {
  std::string trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.erase(trimmed.begin());
  if (!trimmed.empty() && trimmed.front() == '[') return subspace_from_json(json::parse(trimmed), ambient);
  return subspace_from_json(json(text), ambient);
}

json to_json(const OperatorSpace& m) {
  json out = space_summary(m);
  out["h1"] = m.h1();
  out["h2"] = m.h2();
  return out;
}

json to_json(const SamplePlan& plan) {
  json out;
  out["seed"] = plan.seed;
  out["random_count"] = plan.random_count;
  out["basis_vectors"] = plan.basis_vectors;
  out["pairwise_sums"] = plan.pairwise_sums;
  out["conjugate_mixes"] = plan.conjugate_mixes;
  json extra = json::array();
  for (const auto& v : plan.extra) extra.push_back(vector_to_json(v));
  out["extra"] = std::move(extra);
  return out;
}

json to_json(const Prop23Report& report) {
  json out;
  out["square"] = report.square;
  out["adjoint_identity"] = report.adjoint_identity;
  out["annihilator_identity_a"] = optional_bool(report.annihilator_identity_a);
  out["annihilator_identity_b"] = optional_bool(report.annihilator_identity_b);
  out["selfadjoint"] = report.selfadjoint;
  out["selfadjoint_cstar"] = optional_bool(report.selfadjoint_cstar);
  out["von_neumann"] = optional_bool(report.von_neumann);
  out["note"] = "sigma-weak closedness is automatic at finite dimension";
  return out;
}

json to_json(const FiniteBilattice& bil) {
  json out;
  out["caller_asserted"] = bil.caller_asserted;
  json pairs = json::array();
  for (const auto& pair : bil.pairs) pairs.push_back(pair_to_json(pair));
  out["pairs"] = std::move(pairs);
  return out;
}

json to_json(const Verdict& verdict) {
  json out;
  out["status"] = to_string(verdict.status);
  out["path"] = to_string(verdict.path);
  out["completeness_asserted_by_caller"] = verdict.completeness_asserted_by_caller;
  out["ref_space"] = space_summary(verdict.ref_space);
  json witnesses = json::array();
  for (const auto& w : verdict.witnesses) witnesses.push_back(scalar_rows(w));
  out["witnesses"] = std::move(witnesses);
  json screening = json::array();
  for (const auto& s : verdict.screening) {
    json item;
    item["candidate"] = scalar_rows(s.candidate);
    item["falsified"] = s.screen.falsified;
    item["samples_checked"] = s.screen.samples_checked;
    item["witness_vector"] = s.screen.witness.has_value() ? vector_to_json(*s.screen.witness) : json(nullptr);
    screening.push_back(std::move(item));
  }
  out["witness_screening"] = std::move(screening);
  out["samples_used"] = verdict.samples_used;
  out["bilattice"] = verdict.bilattice.has_value() ? to_json(*verdict.bilattice) : json(nullptr);
  return out;
}

json to_json(const TheoremReport& report) {
  json out;
  out["dim_op_bil"] = report.op_bil.dim();
  out["dim_psi_route"] = report.space_psi.dim();
  out["dim_theta_route"] = report.space_theta.dim();
  out["dim_phi_route"] = report.space_phi.dim();
  out["psi_route_matches"] = report.psi_route_matches;
  out["theta_route_matches"] = report.theta_route_matches;
  out["phi_route_matches"] = report.phi_route_matches;
  out["consistent_with_verdict"] = report.consistent_with_verdict;
  return out;
}

json to_json(const Remark11Report& report) {
  json out;
  out["alg_lat"] = space_summary(report.alg_lat);
  out["ref_bound"] = space_summary(report.ref_bound);
  out["alg_lat_equals_algebra"] = report.alg_lat_equals_algebra;
  out["ref_bound_equals_algebra"] = report.ref_bound_equals_algebra;
  out["routes_agree"] = report.routes_agree;
  out["lattice_incomplete_detected"] = report.lattice_incomplete_detected;
  out["completeness_asserted"] = report.completeness_asserted;
  return out;
}

json to_json(const AnalyzeResult& result) {
  json out;
  json problem;
  problem["h1"] = result.m.h1();
  problem["h2"] = result.m.h2();
  problem["dim_m"] = result.m.dim();
  json basis = json::array();
  for (const auto& t : result.m.basis()) basis.push_back(scalar_rows(t));
  problem["basis"] = std::move(basis);
  out["problem"] = std::move(problem);
  out["a_algebra"] = space_summary(result.a_alg);
  out["b_algebra"] = space_summary(result.b_alg);
  out["prop23"] = to_json(result.prop23);
  out["verdict"] = to_json(result.verdict);
  out["theorem35"] = result.theorem35.has_value() ? to_json(*result.theorem35) : json(nullptr);
  out["plan"] = to_json(result.plan);
  return out;
}

json to_json(const SuiteReport& report) {
  json out;
  out["suite"] = report.suite;
  out["all_pass"] = report.all_pass();
  json laws = json::array();
  for (const auto& law : report.laws) {
    json item;
    item["name"] = law.name;
    item["pass"] = law.pass;
    item["skipped"] = law.skipped;
    item["detail"] = law.detail;
    laws.push_back(std::move(item));
  }
  out["laws"] = std::move(laws);
  return out;
}

ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("problem file must be a JSON object");
  if (!j.contains("h1") || !j.contains("h2") || !j.contains("basis"))
    throw std::invalid_argument("problem file needs h1, h2, and basis");
  const std::size_t h1 = j.at("h1").get<std::size_t>();
  const std::size_t h2 = j.at("h2").get<std::size_t>();
  if (h1 < 1 || h2 < 1 || h1 > 16 || h2 > 16)
    throw std::invalid_argument("h1 and h2 must lie in 1..16");
  std::vector<Matrix> basis;
  for (const auto& item : j.at("basis")) basis.push_back(matrix_from_json(item, h2, h1));

  ProblemFile problem;
  problem.m = OperatorSpace::span(h1, h2, basis);

  const bool has_a = j.contains("supplied_lat_a");
  const bool has_b = j.contains("supplied_lat_b_perp");
  if (has_a != has_b) throw std::invalid_argument("supply both lattices or neither");
  if (has_a) {
    SuppliedLattices lattices;
    for (const auto& item : j.at("supplied_lat_a")) lattices.lat_a.push_back(subspace_from_json(item, h1));
    for (const auto& item : j.at("supplied_lat_b_perp")) lattices.lat_b_perp.push_back(subspace_from_json(item, h2));
    problem.supplied = std::move(lattices);
  }

  if (j.contains("plan")) {
    const json& p = j.at("plan");
    if (p.contains("seed")) problem.plan.seed = p.at("seed").get<unsigned long long>();
    if (p.contains("random_count")) problem.plan.random_count = p.at("random_count").get<std::size_t>();
    if (p.contains("basis_vectors")) problem.plan.basis_vectors = p.at("basis_vectors").get<bool>();
    if (p.contains("pairwise_sums")) problem.plan.pairwise_sums = p.at("pairwise_sums").get<bool>();
    if (p.contains("conjugate_mixes")) problem.plan.conjugate_mixes = p.at("conjugate_mixes").get<bool>();
    if (p.contains("extra"))
      for (const auto& item : p.at("extra")) problem.plan.extra.push_back(vector_from_json(item, h1));
  }
  return problem;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("JSON parse error in '" + path + "': " + e.what());
  }
  return problem_from_json(j);
}

std::string render_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace reflex
