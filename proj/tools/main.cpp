#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "equimap/jobspec.hpp"

namespace {

void add_common(CLI::App* cmd, equimap::JobSpec& spec, std::string& points_text,
                std::string& output) {
  cmd->add_option("--geometry", spec.geometry,
                  "geometry id: sphere(n) | euclidean(n) | h2 | h3 | "
                  "riemann-sphere | c2-punctured | so11")
      ->required();
  cmd->add_option("--rep", spec.rep_expr, "rep expression (see README)");
  cmd->add_option("--points", points_text,
                  "semicolon-separated coordinate tuples, e.g. '2,3;0,1'");
  cmd->add_option("--sample", spec.sample_count, "number of sampled points");
  cmd->add_option("--seed", spec.seed, "RNG seed");
  cmd->add_option("--tol", spec.tol, "rank / invariance tolerance");
  cmd->add_option("--output", output, "write JSON here instead of stdout");
}

int emit(const equimap::CliOutcome& outcome, const std::string& output) {
  if (output.empty()) {
    std::cout << outcome.json;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      std::cerr << "{\"error\":{\"code\":2,\"message\":\"cannot open output "
                   "file\"}}\n";
      return 2;
    }
    f << outcome.json;
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant kernel bases on homogeneous spaces"};
  app.require_subcommand(1);

  equimap::JobSpec spec;
  std::string points_text, output;
  std::string group_name, subgroup_name = "none";

  CLI::App* basis = app.add_subcommand("basis", "compute and evaluate a basis");
  add_common(basis, spec, points_text, output);
  basis->add_flag("--parallel", spec.parallel, "evaluate points in parallel");

  CLI::App* check = app.add_subcommand("check", "equivariance residual check");
  add_common(check, spec, points_text, output);
  check->add_option("--threshold", spec.threshold, "pass/fail residual bound");
  check->add_option("--perturb", spec.perturb,
                    "perturb an invariant vector by this magnitude");

  CLI::App* classify =
      app.add_subcommand("classify", "division-algebra block structure");
  add_common(classify, spec, points_text, output);

  CLI::App* tangent =
      app.add_subcommand("tangent", "invariant tangent fields N_g(h)/h");
  tangent->add_option("--group", group_name, "algebra name, e.g. so3")
      ->required();
  tangent->add_option("--subgroup", subgroup_name, "subalgebra name or 'none'");
  tangent->add_option("--output", output, "write JSON here instead of stdout");

  CLI::App* section = app.add_subcommand("section", "section matrix at a point");
  add_common(section, spec, points_text, output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!points_text.empty()) spec.points = equimap::parse_points(points_text);
    equimap::CliOutcome outcome;
    if (basis->parsed()) {
      outcome = equimap::run_basis(spec);
    } else if (check->parsed()) {
      outcome = equimap::run_check(spec);
    } else if (classify->parsed()) {
      outcome = equimap::run_classify(spec);
    } else if (tangent->parsed()) {
      outcome = equimap::run_tangent(group_name, subgroup_name);
    } else {
      if (spec.points.empty())
        throw equimap::SpecError("section needs --points");
      outcome = equimap::run_section(spec.geometry, spec.points.front());
    }
    return emit(outcome, output);
  } catch (const std::exception& e) {
    std::cerr << equimap::error_json(e);
    return equimap::exit_code_for(e);
  }
}
