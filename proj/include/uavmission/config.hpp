#pragma once

#include <vector>

#include "uavmission/channel.hpp"
#include "uavmission/geometry.hpp"

namespace uavmission {

/// A ground target whose data is collected by hovering at `position`.
struct Target {
  Point2D position;
  double volume_bits = 0.0;
  double collect_time_s = 0.0;
};

/// Everything needed to plan one mission. Targets are numbered 1..N in
/// vector order; vertex 0 is the start point and vertex N+1 the finish.
struct MissionConfig {
  RadioParams radio;
  Point2D gbs;
  Point2D start;
  Point2D finish;
  double v_max = 0.0;
  std::vector<Target> targets;

  int num_targets() const { return static_cast<int>(targets.size()); }

  /// Location of graph vertex `v` (0 = start, 1..N = targets, N+1 = finish).
  Point2D vertex_position(int v) const;

  /// Bits that must be delivered on the stage leaving vertex `v` (0 for the start).
  double vertex_volume(int v) const;

  void validate() const;
};

}  // namespace uavmission
