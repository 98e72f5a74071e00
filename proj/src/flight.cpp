#include "uavmission/flight.hpp"

#include <algorithm>
#include <string>

#include "uavmission/errors.hpp"
#include "uavmission/quadrature.hpp"

namespace uavmission {

FlightPrimitive FlightPrimitive::segment(Point2D from, Point2D to, double v_max) {
  return {PrimitiveKind::Segment, from, to, distance(from, to) / v_max};
}

FlightPrimitive FlightPrimitive::hover(Point2D at, double duration_s) {
  return {PrimitiveKind::Hover, at, at, duration_s};
}

Point2D FlightPrimitive::position_at(double tau) const {
  if (kind == PrimitiveKind::Hover || duration_s <= 0.0) return tau <= 0.0 ? from : to;
  const double s = std::clamp(tau / duration_s, 0.0, 1.0);
  if (s == 1.0) return to;
  return lerp(from, to, s);
}

FlightPrimitive FlightPrimitive::clipped(double tau0, double tau1) const {
  tau0 = std::clamp(tau0, 0.0, duration_s);
  tau1 = std::clamp(tau1, tau0, duration_s);
  FlightPrimitive out = *this;
  out.from = position_at(tau0);
  out.to = position_at(tau1);
  out.duration_s = tau1 - tau0;
  return out;
}

double volume_along(const FlightPrimitive& primitive, Point2D g, const RadioParams& radio) {
  if (primitive.duration_s <= 0.0) return 0.0;
  if (primitive.kind == PrimitiveKind::Hover || primitive.from == primitive.to) {
    return rate_bps(primitive.from, g, radio) * primitive.duration_s;
  }
  const Point2D from = primitive.from;
  const Point2D step = primitive.to - primitive.from;
  const double inv_duration = 1.0 / primitive.duration_s;
  auto integrand = [&](double t) {
    return rate_bps(from + (t * inv_duration) * step, g, radio);
  };
  return integrate_simpson(integrand, 0.0, primitive.duration_s);
}

double volume_along_path(std::span<const FlightPrimitive> primitives, Point2D g,
                         const RadioParams& radio) {
  double total = 0.0;
  for (std::size_t k = 0; k < primitives.size(); ++k) {
    if (k > 0 && distance(primitives[k - 1].to, primitives[k].from) > 1e-9) {
      throw NonContiguousPath("flight primitive " + std::to_string(k) +
                              " does not start where the previous one ends");
    }
    total += volume_along(primitives[k], g, radio);
  }
  return total;
}

}  // namespace uavmission
