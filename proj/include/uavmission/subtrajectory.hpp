#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "uavmission/config.hpp"
#include "uavmission/flight.hpp"

namespace uavmission {

enum class StageKind { TimeOriented, RateOriented, Balanced };

std::string_view to_string(StageKind kind);
StageKind stage_kind_from_string(std::string_view name);

/// Flight plan for one transmission stage (or the initial stage).
struct SubTrajectory {
  StageKind kind = StageKind::TimeOriented;
  std::vector<FlightPrimitive> primitives;
  double duration_s = 0.0;
  double delivered_bits = 0.0;
  std::optional<Point2D> turn_point;  // Balanced only
  double hover_s = 0.0;               // RateOriented only

  Point2D origin() const { return primitives.front().from; }
  Point2D destination() const { return primitives.back().to; }
};

inline constexpr double kDefaultPosTolM = 1e-3;

/// Volumes at the two regime boundaries of a stage.
struct StageThresholds {
  double straight_bits = 0.0;  // straight flight origin -> dest
  double via_gbs_bits = 0.0;   // origin -> g -> dest without hovering
};

StageThresholds stage_thresholds(Point2D origin, Point2D dest, const MissionConfig& cfg);

/// Straight max-speed flight from origin to dest.
SubTrajectory time_oriented(Point2D origin, Point2D dest, const MissionConfig& cfg);

/// Fly to the GBS, hover just long enough, fly on to dest.
/// Throws InsufficientVolume when the zero-hover detour already over-delivers.
SubTrajectory rate_oriented(Point2D origin, Point2D dest, double required_bits,
                            const MissionConfig& cfg);

/// Two max-speed legs through a turn point on [origin, g], located by
/// bisection so that the delivered volume meets `required_bits`.
///
/// Requires straight_bits < required_bits < via_gbs_bits; the search keeps
/// the feasible end of the final bracket, so delivered >= required up to
/// quadrature error and the turn point is within `pos_tol_m` of the exact one.
/// Throws DegenerateGeometry when origin coincides with g and InvalidInput
/// when `required_bits` is outside the open threshold interval.
SubTrajectory balanced(Point2D origin, Point2D dest, double required_bits,
                       const MissionConfig& cfg, double pos_tol_m = kDefaultPosTolM);

/// Minimum-time stage plan delivering at least `required_bits`, choosing the
/// structure by thresholds: straight if required <= straight_bits, GBS
/// detour with hover if required >= via_gbs_bits, turn point otherwise.
SubTrajectory solve_stage(Point2D origin, Point2D dest, double required_bits,
                          const MissionConfig& cfg, double pos_tol_m = kDefaultPosTolM);

}  // namespace uavmission
