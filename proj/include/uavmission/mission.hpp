#pragma once

#include <string>
#include <vector>

#include "uavmission/config.hpp"
#include "uavmission/flight.hpp"
#include "uavmission/ordering.hpp"
#include "uavmission/subtrajectory.hpp"

namespace uavmission {

/// Instants at which the UAV arrives at and leaves the i-th visited target.
struct CriticalInstants {
  double t_in = 0.0;
  double t_out = 0.0;
};

/// A flight primitive placed on the mission clock.
struct TimedPrimitive {
  double t_start = 0.0;
  FlightPrimitive primitive;
  bool transmitting = false;
  std::string stage;  // "initial", "collect:<target>" or "transmit:<target>"

  double t_end() const { return t_start + primitive.duration_s; }
};

/// The i-th visited target: collection hover followed by its transmission stage.
struct PlannedStage {
  int target = 0;
  double collect_s = 0.0;
  SubTrajectory transit;
};

struct MissionPlan {
  VisitOrder order;
  std::vector<CriticalInstants> critical_instants;
  SubTrajectory initial;
  std::vector<PlannedStage> stages;
  double total_time_s = 0.0;
  /// Contiguous in time and space from the start point at t = 0 to the finish
  /// at t = total_time_s. Collection hovers of zero length are omitted.
  std::vector<TimedPrimitive> timeline;
};

std::string initial_label();
std::string collect_label(int target);
std::string transmit_label(int target);

/// Builds the full mission from a visit order and the per-edge stage plans.
/// Throws InvalidInput for a bad order and MissingStageSolution when `wm`
/// lacks a required edge plan.
MissionPlan assemble_plan(const MissionConfig& cfg, const VisitOrder& order,
                          const WeightMatrix& wm);

struct ConstraintCheck {
  std::string id;
  bool satisfied = false;
  double margin = 0.0;  // raw; >= 0 means met without slack
};

struct VerificationReport {
  bool feasible = false;
  std::vector<ConstraintCheck> per_constraint;
  /// Bits re-integrated over each transmission interval, in visit order.
  std::vector<double> stage_delivered_bits;
  /// delivered - required per stage. Informational: the per-stage rule is a
  /// sufficient condition only, so it does not affect `feasible`.
  std::vector<double> stage_margins;
  /// For each i: bits delivered in stages i..N minus bits collected in i..N.
  std::vector<double> cumulative_causality_margins;
};

/// Relative shortfall tolerated on volume constraints.
inline constexpr double kVolumeSlack = 1e-5;

/// Checks a plan against the mission constraints from its geometry alone:
/// data causality for every suffix of stages, hovering at each target during
/// its collection window, the speed cap, start and finish points, timeline
/// contiguity, and that the order is a permutation. Volumes are recomputed
/// by quadrature from the timeline; cached stage volumes are never read.
VerificationReport verify_plan(const MissionConfig& cfg, const MissionPlan& plan);

/// Mission completion time T.
double completion_time(const MissionPlan& plan);

/// UAV position at mission time t (clamped to [0, T]).
Point2D position_at(const MissionPlan& plan, double t);

/// Bits delivered while the link is active between t0 and t1 according to
/// the timeline's transmission flags.
double delivered_between(const MissionPlan& plan, const MissionConfig& cfg, double t0, double t1);

struct TrajectorySample {
  double t = 0.0;
  Point2D position;
  double rate_bps = 0.0;  // zero while not transmitting
  double cumulative_bits = 0.0;
  std::string stage;
};

/// Samples at 0, dt, 2dt, ... and always at T. Throws InvalidInput if dt <= 0.
std::vector<TrajectorySample> sample_trajectory(const MissionPlan& plan, const MissionConfig& cfg,
                                                double dt);

}  // namespace uavmission
