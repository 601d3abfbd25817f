#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "reflex/fixtures.hpp"
#include "reflex/json_io.hpp"

namespace {

using namespace reflex;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInconclusive = 2;

struct CommonArgs {
  std::string file;
  std::string fixture_name;
  std::optional<std::size_t> samples;
  std::optional<unsigned long long> seed;
  std::size_t max_enum_dim = 12;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_file = true) {
  if (with_file) cmd->add_option("file", args.file, "problem file (JSON)");
  cmd->add_option("--fixture", args.fixture_name, "use a shipped fixture instead of a file");
  cmd->add_option("--samples", args.samples, "random sample count for the pointwise oracle");
  cmd->add_option("--seed", args.seed, "seed of the deterministic sample stream");
  cmd->add_option("--max-enum-dim", args.max_enum_dim, "lattice enumeration dimension cap")
      ->default_val(std::size_t{12});
  cmd->add_option("--format", args.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", args.out, "write the report to a file instead of stdout");
}

ProblemFile resolve_problem(const CommonArgs& args) {
  const bool has_file = !args.file.empty();
  const bool has_fixture = !args.fixture_name.empty();
  if (has_file == has_fixture)
    throw std::invalid_argument("give exactly one of a problem file or --fixture");
  ProblemFile problem = has_file ? load_problem_file(args.file) : fixture(args.fixture_name);
  if (args.samples.has_value()) problem.plan.random_count = *args.samples;
  if (args.seed.has_value()) problem.plan.seed = *args.seed;
  return problem;
}

void emit(const CommonArgs& args, const std::string& text) {
  if (args.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + args.out + "'");
  out << text;
}

std::string verdict_text(const AnalyzeResult& result) {
  std::string text;
  text += "M: " + std::to_string(result.m.h2()) + "x" + std::to_string(result.m.h1()) +
          " operators, dim " + std::to_string(result.m.dim()) + "\n";
  text += "A_M dim " + std::to_string(result.a_alg.dim()) + ", B_M dim " + std::to_string(result.b_alg.dim()) + "\n";
  text += "verdict: " + std::string(to_string(result.verdict.status)) + " via " +
          to_string(result.verdict.path) + "\n";
  text += "ref_space dim " + std::to_string(result.verdict.ref_space.dim());
  if (!result.verdict.witnesses.empty())
    text += ", " + std::to_string(result.verdict.witnesses.size()) + " witness(es)";
  text += "\n";
  return text;
}

int run_analyze(const CommonArgs& args) {
  const ProblemFile problem = resolve_problem(args);
  AnalyzeOptions options;
  options.max_enum_dim = args.max_enum_dim;
  const AnalyzeResult result = analyze(problem, options);
  emit(args, args.format == "text" ? verdict_text(result) : render_report(to_json(result)));
  return result.verdict.status == VerdictStatus::kInconclusiveUpperBound ? kExitInconclusive : kExitOk;
}

int run_galois(const CommonArgs& args, const std::string& p_text, const std::string& q_text) {
  if (p_text.empty() && q_text.empty()) throw std::invalid_argument("give --p and/or --q");
  const ProblemFile problem = resolve_problem(args);
  const BilatticeContext ctx = BilatticeContext::make(problem.m);

  std::optional<FiniteBilattice> bil;
  if (problem.supplied.has_value() || coordinate_enumeration_applies(ctx, args.max_enum_dim))
    bil = enumerate_bil(ctx, args.max_enum_dim, problem.supplied);

  json report;
  bool disagreement = false;
  if (!p_text.empty()) {
    const Subspace p = parse_subspace_text(p_text, problem.m.h1());
    if (!is_invariant(p, ctx.a_gens))
      throw std::domain_error("--p is not invariant under A_M (phi is defined on Lat(A_M))");
    const Subspace fixpoint = phi(p, ctx);
    report["p"] = to_json(p);
    report["phi"] = to_json(fixpoint);
    if (bil.has_value()) {
      const Subspace joined = phi_by_join(p, ctx, bil->lat_b_perp);
      report["phi_join_route"] = to_json(joined);
      report["phi_routes_agree"] = joined == fixpoint;
      disagreement = disagreement || joined != fixpoint;
    } else {
      report["phi_join_route"] = nullptr;
      report["phi_routes_agree"] = nullptr;
    }
    const ProjectionPair image = psi1({p, fixpoint}, ctx);
    report["psi1"] = json::array({to_json(image.p), to_json(image.q)});
  }
  if (!q_text.empty()) {
    const Subspace q = parse_subspace_text(q_text, problem.m.h2());
    if (!is_invariant(q, ctx.b_star_gens))
      throw std::domain_error("--q is not invariant under B_M^* (theta is defined on Lat(B_M)^perp)");
    const Subspace fixpoint = theta(q, ctx);
    report["q"] = to_json(q);
    report["theta"] = to_json(fixpoint);
    if (bil.has_value()) {
      const Subspace joined = theta_by_join(q, ctx, bil->lat_a);
      report["theta_join_route"] = to_json(joined);
      report["theta_routes_agree"] = joined == fixpoint;
      disagreement = disagreement || joined != fixpoint;
    } else {
      report["theta_join_route"] = nullptr;
      report["theta_routes_agree"] = nullptr;
    }
    const ProjectionPair image = psi2({fixpoint, q}, ctx);
    report["psi2"] = json::array({to_json(image.p), to_json(image.q)});
  }
  if (disagreement) report["error"] = "fixpoint and join routes disagree";
  emit(args, render_report(report));
  return disagreement ? kExitInconclusive : kExitOk;
}

int run_check(const CommonArgs& args, const std::string& suite) {
  const ProblemFile problem = resolve_problem(args);
  AnalyzeOptions options;
  options.max_enum_dim = args.max_enum_dim;
  const SuiteReport report = run_suite(problem, suite, options);
  if (args.format == "text") {
    std::string text;
    for (const auto& law : report.laws)
      text += std::string(law.pass ? "PASS" : "FAIL") + (law.skipped ? " (skipped)" : "") + "  " + law.name +
              (law.detail.empty() ? "" : "  [" + law.detail + "]") + "\n";
    emit(args, text);
  } else {
    emit(args, render_report(to_json(report)));
  }
  return report.all_pass() ? kExitOk : kExitInconclusive;
}

int run_fixtures(const CommonArgs& args, bool list, const std::string& run_name) {
  if (list == !run_name.empty())
    throw std::invalid_argument("give exactly one of --list or --run");
  if (list) {
    if (args.format == "text") {
      std::string text;
      for (const auto& name : fixture_names()) text += name + "\n";
      emit(args, text);
    } else {
      emit(args, render_report(json(fixture_names())));
    }
    return kExitOk;
  }
  CommonArgs run_args = args;
  run_args.fixture_name = run_name;
  run_args.file.clear();
  return run_analyze(run_args);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for reflexive spaces of operators"};
  app.require_subcommand(1);

  CommonArgs analyze_args;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "algebras, structural report, reflexivity verdict");
  add_common(analyze_cmd, analyze_args);

  CommonArgs galois_args;
  std::string p_text, q_text;
  CLI::App* galois_cmd = app.add_subcommand("galois", "evaluate phi/theta/psi at a subspace");
  add_common(galois_cmd, galois_args);
  galois_cmd->add_option("--p", p_text, "subspace of H1 (basis JSON or shorthand)");
  galois_cmd->add_option("--q", q_text, "subspace of H2 (basis JSON or shorthand)");

  CommonArgs check_args;
  std::string suite;
  CLI::App* check_cmd = app.add_subcommand("check", "run a property suite");
  add_common(check_cmd, check_args);
  check_cmd->add_option("--suite", suite, "prop23|prop33|lemma31|cor34|theo35|all")->required();

  CommonArgs fixtures_args;
  bool list = false;
  std::string run_name;
  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "list or run shipped fixtures");
  add_common(fixtures_cmd, fixtures_args, /*with_file=*/false);
  fixtures_cmd->add_flag("--list", list, "list fixture names");
  fixtures_cmd->add_option("--run", run_name, "analyze the named fixture");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) return run_analyze(analyze_args);
    if (galois_cmd->parsed()) return run_galois(galois_args, p_text, q_text);
    if (check_cmd->parsed()) return run_check(check_args, suite);
    if (fixtures_cmd->parsed()) return run_fixtures(fixtures_args, list, run_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
