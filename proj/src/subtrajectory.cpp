#include "uavmission/subtrajectory.hpp"

#include <cmath>
#include <string>

#include "uavmission/errors.hpp"

namespace uavmission {

std::string_view to_string(StageKind kind) {
  switch (kind) {
    case StageKind::TimeOriented: return "time_oriented";
    case StageKind::RateOriented: return "rate_oriented";
    case StageKind::Balanced: return "balanced";
  }
  return "unknown";
}

StageKind stage_kind_from_string(std::string_view name) {
  if (name == "time_oriented") return StageKind::TimeOriented;
  if (name == "rate_oriented") return StageKind::RateOriented;
  if (name == "balanced") return StageKind::Balanced;
  throw ParseError("unknown stage kind '" + std::string(name) + "'");
}

namespace {

double sum_durations(const std::vector<FlightPrimitive>& prims) {
  double total = 0.0;
  for (const auto& p : prims) total += p.duration_s;
  return total;
}

double two_leg_volume(Point2D origin, Point2D turn, Point2D dest, const MissionConfig& cfg) {
  return volume_along(FlightPrimitive::segment(origin, turn, cfg.v_max), cfg.gbs, cfg.radio) +
         volume_along(FlightPrimitive::segment(turn, dest, cfg.v_max), cfg.gbs, cfg.radio);
}

SubTrajectory two_leg(Point2D origin, Point2D turn, Point2D dest, const MissionConfig& cfg) {
  SubTrajectory out;
  out.kind = StageKind::Balanced;
  out.primitives = {FlightPrimitive::segment(origin, turn, cfg.v_max),
                    FlightPrimitive::segment(turn, dest, cfg.v_max)};
  out.duration_s = sum_durations(out.primitives);
  out.delivered_bits = volume_along_path(out.primitives, cfg.gbs, cfg.radio);
  out.turn_point = turn;
  return out;
}

}  // namespace

StageThresholds stage_thresholds(Point2D origin, Point2D dest, const MissionConfig& cfg) {
  StageThresholds th;
  th.straight_bits =
      volume_along(FlightPrimitive::segment(origin, dest, cfg.v_max), cfg.gbs, cfg.radio);
  th.via_gbs_bits = two_leg_volume(origin, cfg.gbs, dest, cfg);
  return th;
}

SubTrajectory time_oriented(Point2D origin, Point2D dest, const MissionConfig& cfg) {
  SubTrajectory out;
  out.kind = StageKind::TimeOriented;
  out.primitives = {FlightPrimitive::segment(origin, dest, cfg.v_max)};
  out.duration_s = out.primitives.front().duration_s;
  out.delivered_bits = volume_along(out.primitives.front(), cfg.gbs, cfg.radio);
  return out;
}

SubTrajectory rate_oriented(Point2D origin, Point2D dest, double required_bits,
                            const MissionConfig& cfg) {
  const FlightPrimitive inbound = FlightPrimitive::segment(origin, cfg.gbs, cfg.v_max);
  const FlightPrimitive outbound = FlightPrimitive::segment(cfg.gbs, dest, cfg.v_max);
  const double zero_hover_bits =
      volume_along(inbound, cfg.gbs, cfg.radio) + volume_along(outbound, cfg.gbs, cfg.radio);
  if (required_bits < zero_hover_bits) {
    throw InsufficientVolume("required volume is below the zero-hover GBS detour volume");
  }
  const double peak_rate = rate_bps(cfg.gbs, cfg.gbs, cfg.radio);
  const double hover_s = (required_bits - zero_hover_bits) / peak_rate;

  SubTrajectory out;
  out.kind = StageKind::RateOriented;
  out.primitives = {inbound, FlightPrimitive::hover(cfg.gbs, hover_s), outbound};
  out.duration_s = sum_durations(out.primitives);
  out.delivered_bits = zero_hover_bits + peak_rate * hover_s;
  out.hover_s = hover_s;
  return out;
}

namespace {

// Bisection on the arc-length position of the turn point along [origin, g].
// Invariant: volume(lo) < required <= volume(hi); volume grows as the turn
// point slides toward g.
SubTrajectory turn_point_search(Point2D origin, Point2D dest, double required_bits,
                                const MissionConfig& cfg, double pos_tol_m) {
  const double reach = distance(origin, cfg.gbs);
  const Point2D heading = (1.0 / reach) * (cfg.gbs - origin);
  auto turn_at = [&](double s) { return s >= reach ? cfg.gbs : origin + s * heading; };

  double lo = 0.0;
  double hi = reach;
  while (hi - lo > pos_tol_m) {
    const double mid = 0.5 * (lo + hi);
    if (two_leg_volume(origin, turn_at(mid), dest, cfg) >= required_bits) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return two_leg(origin, turn_at(hi), dest, cfg);
}

}  // namespace

SubTrajectory balanced(Point2D origin, Point2D dest, double required_bits,
                       const MissionConfig& cfg, double pos_tol_m) {
  if (distance(origin, cfg.gbs) == 0.0) {
    throw DegenerateGeometry("stage origin coincides with the GBS; no turn-point family");
  }
  if (!(pos_tol_m > 0.0)) throw InvalidInput("positional tolerance must be positive");
  const StageThresholds th = stage_thresholds(origin, dest, cfg);
  if (!(required_bits > th.straight_bits && required_bits < th.via_gbs_bits)) {
    throw InvalidInput("required volume outside the turn-point regime");
  }
  return turn_point_search(origin, dest, required_bits, cfg, pos_tol_m);
}

SubTrajectory solve_stage(Point2D origin, Point2D dest, double required_bits,
                          const MissionConfig& cfg, double pos_tol_m) {
  if (!(required_bits >= 0.0)) throw InvalidInput("required volume must be >= 0");
  const StageThresholds th = stage_thresholds(origin, dest, cfg);
  if (required_bits <= th.straight_bits) return time_oriented(origin, dest, cfg);
  if (required_bits >= th.via_gbs_bits) return rate_oriented(origin, dest, required_bits, cfg);
  if (!(pos_tol_m > 0.0)) throw InvalidInput("positional tolerance must be positive");
  return turn_point_search(origin, dest, required_bits, cfg, pos_tol_m);
}

}  // namespace uavmission
