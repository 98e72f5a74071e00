#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uavmission/config.hpp"
#include "uavmission/ordering.hpp"

namespace uavmission::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kInputError = 2,
  kInternalError = 3,
};

/// Largest mission that `auto` ordering solves exactly.
inline constexpr int kAutoExhaustiveLimit = 8;

struct SolveOptions {
  std::string scenario_path;
  std::string order_mode = "auto";  // auto | nn | exhaustive | distance | "i,j,k,..."
  std::optional<double> alpha;
  double pos_tol_m = kDefaultPosTolM;
  std::string out_plan_path;  // empty: do not write
};

struct VerifyOptions {
  std::string scenario_path;
  std::string plan_path;
  std::optional<double> alpha;
};

struct CompareOptions {
  std::string scenario_path;
  std::vector<double> alphas;  // empty: the scenario's own alpha
  double pos_tol_m = kDefaultPosTolM;
  std::string out_csv_path;
};

struct SampleOptions {
  std::string scenario_path;
  std::string plan_path;
  std::optional<double> alpha;
  double dt = 1.0;
  std::string out_csv_path;  // empty: stdout
};

/// Chooses a visit order for `wm` according to `mode`. Throws InvalidInput
/// for unknown modes or an explicit list that is not a permutation.
VisitOrder choose_order(const MissionConfig& cfg, const WeightMatrix& wm, const std::string& mode);

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sample(const SampleOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace uavmission::cli
