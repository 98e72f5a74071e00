#pragma once

#include <span>

#include "uavmission/channel.hpp"
#include "uavmission/geometry.hpp"

namespace uavmission {

enum class PrimitiveKind { Segment, Hover };

/// One piece of a flight plan: constant-speed straight flight or a hover.
struct FlightPrimitive {
  PrimitiveKind kind = PrimitiveKind::Hover;
  Point2D from;
  Point2D to;
  double duration_s = 0.0;

  static FlightPrimitive segment(Point2D from, Point2D to, double v_max);
  static FlightPrimitive hover(Point2D at, double duration_s);

  double length() const { return distance(from, to); }

  /// Position `tau` seconds after the primitive starts (clamped to its span).
  Point2D position_at(double tau) const;

  /// Sub-primitive covering [tau0, tau1] of this primitive's local time.
  FlightPrimitive clipped(double tau0, double tau1) const;
};

/// Bits delivered to the GBS while flying `primitive` with the link active.
/// Hovers are exact; segments use adaptive Simpson quadrature over time.
double volume_along(const FlightPrimitive& primitive, Point2D g, const RadioParams& radio);

/// Sum of volume_along over a contiguous path.
/// Throws NonContiguousPath if consecutive endpoints differ by more than 1e-9 m.
double volume_along_path(std::span<const FlightPrimitive> primitives, Point2D g,
                         const RadioParams& radio);

}  // namespace uavmission
