#include "uavmission/mission.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uavmission/errors.hpp"

namespace uavmission {

std::string initial_label() { return "initial"; }
std::string collect_label(int target) { return "collect:" + std::to_string(target); }
std::string transmit_label(int target) { return "transmit:" + std::to_string(target); }

namespace {

const SubTrajectory& stage_plan(const WeightMatrix& wm, int tail, int head) {
  const auto it = wm.stage_solutions().find({tail, head});
  if (it == wm.stage_solutions().end()) {
    throw MissingStageSolution("no stage plan for edge (" + std::to_string(tail) + ", " +
                               std::to_string(head) + ")");
  }
  return it->second;
}

void append_stage(std::vector<TimedPrimitive>& timeline, double t_start, const SubTrajectory& sub,
                  bool transmitting, const std::string& label) {
  double t = t_start;
  for (const FlightPrimitive& p : sub.primitives) {
    timeline.push_back({t, p, transmitting, label});
    t += p.duration_s;
  }
}

double time_tolerance(double total) { return 1e-9 * std::max(1.0, std::abs(total)); }

// Sum of volumes over the parts of `timeline` inside [t0, t1].
double window_volume(const std::vector<TimedPrimitive>& timeline, std::size_t& hint, double t0,
                     double t1, const MissionConfig& cfg, bool only_transmitting) {
  if (!(t1 > t0)) return 0.0;
  while (hint < timeline.size() && timeline[hint].t_end() <= t0) ++hint;
  double total = 0.0;
  for (std::size_t k = hint; k < timeline.size(); ++k) {
    const TimedPrimitive& tp = timeline[k];
    if (tp.t_start >= t1) break;
    if (only_transmitting && !tp.transmitting) continue;
    const double a = std::max(t0, tp.t_start) - tp.t_start;
    const double b = std::min(t1, tp.t_end()) - tp.t_start;
    if (b <= a) continue;
    total += volume_along(tp.primitive.clipped(a, b), cfg.gbs, cfg.radio);
  }
  return total;
}

// Index of the timeline entry in effect at time t: the last one starting at or before t.
std::size_t locate(const std::vector<TimedPrimitive>& timeline, double t) {
  const auto it = std::upper_bound(timeline.begin(), timeline.end(), t,
                                   [](double v, const TimedPrimitive& tp) { return v < tp.t_start; });
  if (it == timeline.begin()) return 0;
  return static_cast<std::size_t>(std::distance(timeline.begin(), it) - 1);
}

}  // namespace

MissionPlan assemble_plan(const MissionConfig& cfg, const VisitOrder& order,
                          const WeightMatrix& wm) {
  const int n = cfg.num_targets();
  if (wm.num_targets() != n) throw InvalidInput("weight matrix does not match the mission");
  if (!is_permutation_of_targets(order.order, n)) {
    throw InvalidInput("visit order is not a permutation of the targets");
  }

  MissionPlan plan;
  plan.order = order;
  plan.order.cost_s = path_cost(wm, order.order);

  plan.initial = stage_plan(wm, 0, order.order.front());
  append_stage(plan.timeline, 0.0, plan.initial, false, initial_label());
  double t_in = plan.initial.duration_s;

  for (std::size_t i = 0; i < order.order.size(); ++i) {
    const int target = order.order[i];
    const int next = i + 1 < order.order.size() ? order.order[i + 1] : n + 1;
    const double collect_s = cfg.targets[static_cast<std::size_t>(target - 1)].collect_time_s;
    const double t_out = t_in + collect_s;
    plan.critical_instants.push_back({t_in, t_out});

    if (collect_s > 0.0) {
      plan.timeline.push_back({t_in, FlightPrimitive::hover(cfg.vertex_position(target), collect_s),
                               false, collect_label(target)});
    }
    const SubTrajectory& transit = stage_plan(wm, target, next);
    append_stage(plan.timeline, t_out, transit, true, transmit_label(target));
    plan.stages.push_back({target, collect_s, transit});

    t_in = t_out + transit.duration_s;
  }
  plan.total_time_s = t_in;
  return plan;
}

double completion_time(const MissionPlan& plan) { return plan.total_time_s; }

Point2D position_at(const MissionPlan& plan, double t) {
  if (plan.timeline.empty()) throw InvalidInput("plan has an empty timeline");
  const TimedPrimitive& tp = plan.timeline[locate(plan.timeline, t)];
  return tp.primitive.position_at(t - tp.t_start);
}

double delivered_between(const MissionPlan& plan, const MissionConfig& cfg, double t0, double t1) {
  std::size_t hint = 0;
  return window_volume(plan.timeline, hint, t0, t1, cfg, true);
}

VerificationReport verify_plan(const MissionConfig& cfg, const MissionPlan& plan) {
  VerificationReport report;
  const int n = cfg.num_targets();
  const double total = plan.total_time_s;
  const double t_tol = time_tolerance(total);
  constexpr double kPosTol = 1e-6;
  auto add = [&](std::string id, bool ok, double margin) {
    report.per_constraint.push_back({std::move(id), ok, margin});
  };

  const bool order_ok = is_permutation_of_targets(plan.order.order, n);
  add("order_permutation", order_ok, order_ok ? 0.0 : -1.0);

  const bool shape_ok = order_ok && static_cast<int>(plan.critical_instants.size()) == n &&
                        !plan.timeline.empty();
  if (!shape_ok) {
    add("plan_shape", false, -1.0);
    report.feasible = false;
    return report;
  }

  // Timeline contiguity.
  double max_pos_gap = 0.0;
  double max_time_gap = std::abs(plan.timeline.front().t_start);
  for (std::size_t k = 1; k < plan.timeline.size(); ++k) {
    const TimedPrimitive& a = plan.timeline[k - 1];
    const TimedPrimitive& b = plan.timeline[k];
    max_pos_gap = std::max(max_pos_gap, distance(a.primitive.to, b.primitive.from));
    max_time_gap = std::max(max_time_gap, std::abs(b.t_start - a.t_end()));
  }
  for (const TimedPrimitive& tp : plan.timeline) {
    if (tp.primitive.duration_s < 0.0) max_time_gap = std::max(max_time_gap, -tp.primitive.duration_s);
    if (tp.primitive.kind == PrimitiveKind::Hover) {
      max_pos_gap = std::max(max_pos_gap, distance(tp.primitive.from, tp.primitive.to));
    }
  }
  add("timeline_position_continuity", max_pos_gap <= kPosTol, -max_pos_gap);
  add("timeline_time_continuity", max_time_gap <= t_tol, -max_time_gap);

  // Endpoints.
  const double start_dev = distance(position_at(plan, 0.0), cfg.start);
  add("start_point", start_dev <= kPosTol, -start_dev);
  const double end_dev = distance(plan.timeline.back().primitive.to, cfg.finish);
  const double end_time_dev = std::abs(plan.timeline.back().t_end() - total);
  add("end_point", end_dev <= kPosTol && end_time_dev <= t_tol, -std::max(end_dev, end_time_dev));

  // Speed cap.
  double max_speed = 0.0;
  for (const TimedPrimitive& tp : plan.timeline) {
    const double len = tp.primitive.length();
    if (len == 0.0) continue;
    const double speed = tp.primitive.duration_s > 0.0
                             ? len / tp.primitive.duration_s
                             : std::numeric_limits<double>::infinity();
    max_speed = std::max(max_speed, speed);
  }
  add("speed_limit", max_speed <= cfg.v_max * (1.0 + 1e-9), cfg.v_max - max_speed);

  // Critical instants: ordered in time and each window lasts the collection time.
  double timing_violation = 0.0;
  double prev_out = 0.0;
  for (int i = 0; i < n; ++i) {
    const CriticalInstants& ci = plan.critical_instants[static_cast<std::size_t>(i)];
    const int target = plan.order.order[static_cast<std::size_t>(i)];
    const double collect_s = cfg.targets[static_cast<std::size_t>(target - 1)].collect_time_s;
    timing_violation = std::max(timing_violation, prev_out - ci.t_in);
    timing_violation = std::max(timing_violation, std::abs((ci.t_out - ci.t_in) - collect_s));
    prev_out = ci.t_out;
  }
  timing_violation = std::max(timing_violation, prev_out - total);
  add("stage_timing", timing_violation <= t_tol, -timing_violation);

  // Hovering at each target for its whole collection window.
  for (int i = 0; i < n; ++i) {
    const CriticalInstants& ci = plan.critical_instants[static_cast<std::size_t>(i)];
    const int target = plan.order.order[static_cast<std::size_t>(i)];
    const Point2D a = cfg.vertex_position(target);
    double dev = std::max(distance(position_at(plan, ci.t_in), a),
                          distance(position_at(plan, ci.t_out), a));
    for (const TimedPrimitive& tp : plan.timeline) {
      const double lo = std::max(ci.t_in, tp.t_start);
      const double hi = std::min(ci.t_out, tp.t_end());
      if (hi <= lo) continue;
      const FlightPrimitive part = tp.primitive.clipped(lo - tp.t_start, hi - tp.t_start);
      dev = std::max({dev, distance(part.from, a), distance(part.to, a)});
    }
    add("collection_hover:" + std::to_string(target), dev <= kPosTol, -dev);
  }

  // Data causality, recomputed from geometry over each transmission window.
  std::vector<double> required(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const CriticalInstants& ci = plan.critical_instants[static_cast<std::size_t>(i)];
    const double window_end =
        i + 1 < n ? plan.critical_instants[static_cast<std::size_t>(i + 1)].t_in : total;
    std::size_t hint = 0;
    const double delivered = window_volume(plan.timeline, hint, ci.t_out, window_end, cfg, false);
    required[static_cast<std::size_t>(i)] =
        cfg.vertex_volume(plan.order.order[static_cast<std::size_t>(i)]);
    report.stage_delivered_bits.push_back(delivered);
    report.stage_margins.push_back(delivered - required[static_cast<std::size_t>(i)]);
  }
  report.cumulative_causality_margins.assign(static_cast<std::size_t>(n), 0.0);
  double suffix_delivered = 0.0;
  double suffix_required = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    suffix_delivered += report.stage_delivered_bits[static_cast<std::size_t>(i)];
    suffix_required += required[static_cast<std::size_t>(i)];
    report.cumulative_causality_margins[static_cast<std::size_t>(i)] =
        suffix_delivered - suffix_required;
  }
  for (int i = 0; i < n; ++i) {
    double suffix_req = 0.0;
    for (int j = i; j < n; ++j) suffix_req += required[static_cast<std::size_t>(j)];
    const double margin = report.cumulative_causality_margins[static_cast<std::size_t>(i)];
    add("causality:" + std::to_string(i + 1), margin >= -kVolumeSlack * suffix_req, margin);
  }

  report.feasible = std::all_of(report.per_constraint.begin(), report.per_constraint.end(),
                                [](const ConstraintCheck& c) { return c.satisfied; });
  return report;
}

std::vector<TrajectorySample> sample_trajectory(const MissionPlan& plan, const MissionConfig& cfg,
                                                double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidInput("sampling step must be positive");
  if (plan.timeline.empty()) throw InvalidInput("plan has an empty timeline");
  const double total = plan.total_time_s;

  std::vector<double> times;
  // Grid points within rounding of T collapse onto the closing sample at T.
  const double last_grid = total - 1e-12 * std::max(1.0, total);
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (t >= last_grid) break;
    times.push_back(t);
  }
  times.push_back(total);

  std::vector<TrajectorySample> out;
  out.reserve(times.size());
  std::size_t hint = 0;
  double cumulative = 0.0;
  double prev_t = 0.0;
  for (double t : times) {
    cumulative += window_volume(plan.timeline, hint, prev_t, t, cfg, true);
    prev_t = t;
    const TimedPrimitive& tp = plan.timeline[locate(plan.timeline, t)];
    const Point2D u = tp.primitive.position_at(t - tp.t_start);
    const double rate = tp.transmitting ? rate_bps(u, cfg.gbs, cfg.radio) : 0.0;
    out.push_back({t, u, rate, cumulative, tp.stage});
  }
  return out;
}

}  // namespace uavmission
