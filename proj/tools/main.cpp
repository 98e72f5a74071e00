#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace uavmission::cli;

  CLI::App app{"Mission planner for a data-collecting cellular-connected UAV"};
  app.require_subcommand(1);

  SolveOptions solve;
  double solve_alpha = 0.0;
  auto* solve_cmd = app.add_subcommand("solve", "Plan a minimum-time mission");
  solve_cmd->add_option("scenario", solve.scenario_path, "Scenario JSON")->required();
  solve_cmd->add_option("--order", solve.order_mode,
                        "auto | nn | exhaustive | distance | explicit list such as 2,1,3")
      ->capture_default_str();
  auto* solve_alpha_opt = solve_cmd->add_option("--alpha", solve_alpha, "Override volume scale");
  solve_cmd->add_option("--pos-tol-m", solve.pos_tol_m, "Turn-point bisection tolerance (m)")
      ->capture_default_str();
  solve_cmd->add_option("--out", solve.out_plan_path, "Write the plan document here");

  VerifyOptions verify;
  double verify_alpha = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "Check a plan against the mission constraints");
  verify_cmd->add_option("scenario", verify.scenario_path, "Scenario JSON")->required();
  verify_cmd->add_option("plan", verify.plan_path, "Plan JSON")->required();
  auto* verify_alpha_opt = verify_cmd->add_option("--alpha", verify_alpha, "Override volume scale");

  CompareOptions compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Proposed order vs distance-only order over volume scales");
  compare_cmd->add_option("scenario", compare.scenario_path, "Scenario JSON")->required();
  compare_cmd->add_option("--alphas", compare.alphas, "Volume scales, e.g. 0.5,1,1.5")
      ->delimiter(',');
  compare_cmd->add_option("--pos-tol-m", compare.pos_tol_m, "Turn-point bisection tolerance (m)")
      ->capture_default_str();
  compare_cmd->add_option("--out", compare.out_csv_path, "Write CSV here");

  SampleOptions sample;
  double sample_alpha = 0.0;
  auto* sample_cmd = app.add_subcommand("sample", "Export a sampled trajectory as CSV");
  sample_cmd->add_option("scenario", sample.scenario_path, "Scenario JSON")->required();
  sample_cmd->add_option("plan", sample.plan_path, "Plan JSON")->required();
  sample_cmd->add_option("--dt", sample.dt, "Sampling step (s)")->capture_default_str();
  auto* sample_alpha_opt = sample_cmd->add_option("--alpha", sample_alpha, "Override volume scale");
  sample_cmd->add_option("--out", sample.out_csv_path, "Write CSV here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*solve_cmd) {
    if (*solve_alpha_opt) solve.alpha = solve_alpha;
    return cmd_solve(solve, std::cout, std::cerr);
  }
  if (*verify_cmd) {
    if (*verify_alpha_opt) verify.alpha = verify_alpha;
    return cmd_verify(verify, std::cout, std::cerr);
  }
  if (*compare_cmd) return cmd_compare(compare, std::cout, std::cerr);
  if (*sample_cmd) {
    if (*sample_alpha_opt) sample.alpha = sample_alpha;
    return cmd_sample(sample, std::cout, std::cerr);
  }
  return kInputError;
}
