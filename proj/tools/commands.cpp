#include "commands.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "uavmission/errors.hpp"
#include "uavmission/io.hpp"
#include "uavmission/mission.hpp"

namespace uavmission::cli {

namespace {

MissionConfig load_config(const std::string& path, const std::optional<double>& alpha) {
  io::ScenarioFile scenario = io::load_scenario(path);
  if (alpha) {
    if (!(*alpha >= 0.0)) throw ParseError("alpha must be >= 0");
    scenario.alpha = *alpha;
  }
  MissionConfig cfg = scenario.to_config();
  cfg.validate();
  return cfg;
}

std::string join(const std::vector<int>& order, char sep) {
  std::ostringstream ss;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) ss << sep;
    ss << order[k];
  }
  return ss.str();
}

std::vector<int> parse_order_list(const std::string& text) {
  std::vector<int> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad order entry '" + item + "'");
    }
    if (used != item.size()) throw InvalidInput("bad order entry '" + item + "'");
    order.push_back(v);
  }
  return order;
}

void print_report(const VerificationReport& report, std::ostream& out) {
  out << std::setprecision(10);
  for (const ConstraintCheck& c : report.per_constraint) {
    out << (c.satisfied ? "ok   " : "FAIL ") << std::left << std::setw(32) << c.id
        << " margin " << c.margin << '\n';
  }
  for (std::size_t i = 0; i < report.stage_delivered_bits.size(); ++i) {
    out << "stage " << i + 1 << " delivered " << report.stage_delivered_bits[i] << " bits, margin "
        << report.stage_margins[i] << '\n';
  }
  out << "feasible: " << (report.feasible ? "yes" : "no") << '\n';
}

}  // namespace

VisitOrder choose_order(const MissionConfig& cfg, const WeightMatrix& wm, const std::string& mode) {
  if (mode == "auto") {
    return cfg.num_targets() <= kAutoExhaustiveLimit ? solve_order_exhaustive(wm)
                                                     : solve_order_heuristic(wm);
  }
  if (mode == "exhaustive") return solve_order_exhaustive(wm);
  if (mode == "nn") return solve_order_heuristic(wm);
  if (mode == "distance") return solve_order_distance_tsp(cfg, wm);
  std::vector<int> order = parse_order_list(mode);
  if (!is_permutation_of_targets(order, cfg.num_targets())) {
    throw InvalidInput("order '" + mode + "' is not a permutation of 1.." +
                       std::to_string(cfg.num_targets()));
  }
  const double cost = path_cost(wm, order);
  return {std::move(order), cost};
}

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  MissionConfig cfg;
  WeightMatrix wm;
  VisitOrder order;
  try {
    cfg = load_config(opts.scenario_path, opts.alpha);
    if (!(opts.pos_tol_m > 0.0)) throw InvalidInput("--pos-tol-m must be positive");
    wm = build_weight_matrix(cfg, opts.pos_tol_m);
    order = choose_order(cfg, wm, opts.order_mode);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const MissionPlan plan = assemble_plan(cfg, order, wm);
  const VerificationReport report = verify_plan(cfg, plan);
  if (!opts.out_plan_path.empty()) {
    try {
      io::write_file(opts.out_plan_path, io::dump_plan(plan));
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

  out << "order: " << join(plan.order.order, ',') << '\n';
  out << std::setprecision(12);
  for (const PlannedStage& st : plan.stages) {
    out << "stage target " << st.target << ": " << to_string(st.transit.kind) << ", "
        << st.transit.duration_s << " s\n";
  }
  out << "total_time_s: " << completion_time(plan) << '\n';
  if (!report.feasible) {
    err << "internal error: solver plan failed verification\n";
    print_report(report, err);
    return kInternalError;
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  MissionConfig cfg;
  MissionPlan plan;
  try {
    cfg = load_config(opts.scenario_path, opts.alpha);
    plan = io::load_plan(opts.plan_path);
    if (static_cast<int>(plan.order.order.size()) != cfg.num_targets()) {
      throw ParseError("plan has " + std::to_string(plan.order.order.size()) +
                       " targets, scenario has " + std::to_string(cfg.num_targets()));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const VerificationReport report = verify_plan(cfg, plan);
  print_report(report, out);
  return report.feasible ? kOk : kInfeasible;
}

int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err) {
  io::ScenarioFile scenario;
  try {
    scenario = io::load_scenario(opts.scenario_path);
    if (!(opts.pos_tol_m > 0.0)) throw InvalidInput("--pos-tol-m must be positive");
    for (double a : opts.alphas) {
      if (!(a >= 0.0)) throw InvalidInput("alphas must be >= 0");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const std::vector<double> alphas =
      opts.alphas.empty() ? std::vector<double>{scenario.alpha} : opts.alphas;

  std::ostringstream csv;
  csv << "alpha,proposed_s,distance_tsp_s,proposed_order,distance_order\n";
  csv << std::setprecision(17);
  out << std::left << std::setw(10) << "alpha" << std::setw(18) << "proposed_s" << std::setw(18)
      << "distance_tsp_s" << std::setw(16) << "proposed" << "distance\n";
  for (double alpha : alphas) {
    scenario.alpha = alpha;
    const MissionConfig cfg = scenario.to_config();
    try {
      cfg.validate();
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
    const WeightMatrix wm = build_weight_matrix(cfg, opts.pos_tol_m);
    const VisitOrder proposed = choose_order(cfg, wm, "auto");
    const VisitOrder by_distance = solve_order_distance_tsp(cfg, wm);
    const double t_proposed = completion_time(assemble_plan(cfg, proposed, wm));
    const double t_distance = completion_time(assemble_plan(cfg, by_distance, wm));
    out << std::setprecision(6) << std::setw(10) << alpha << std::setprecision(10)
        << std::setw(18) << t_proposed << std::setw(18) << t_distance << std::setw(16)
        << join(proposed.order, ',') << join(by_distance.order, ',') << '\n';
    csv << alpha << ',' << t_proposed << ',' << t_distance << ',' << join(proposed.order, '-')
        << ',' << join(by_distance.order, '-') << '\n';
  }
  if (!opts.out_csv_path.empty()) {
    try {
      io::write_file(opts.out_csv_path, csv.str());
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }
  return kOk;
}

int cmd_sample(const SampleOptions& opts, std::ostream& out, std::ostream& err) {
  MissionConfig cfg;
  MissionPlan plan;
  try {
    if (!(opts.dt > 0.0)) throw InvalidInput("--dt must be positive");
    cfg = load_config(opts.scenario_path, opts.alpha);
    plan = io::load_plan(opts.plan_path);
    if (static_cast<int>(plan.order.order.size()) != cfg.num_targets()) {
      throw ParseError("plan and scenario disagree on the number of targets");
    }
    if (plan.timeline.empty()) throw ParseError("plan has an empty timeline");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const auto samples = sample_trajectory(plan, cfg, opts.dt);
  if (opts.out_csv_path.empty()) {
    io::write_samples_csv(out, samples);
    return kOk;
  }
  std::ostringstream csv;
  io::write_samples_csv(csv, samples);
  try {
    io::write_file(opts.out_csv_path, csv.str());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  out << "wrote " << samples.size() << " samples to " << opts.out_csv_path << '\n';
  return kOk;
}

}  // namespace uavmission::cli
