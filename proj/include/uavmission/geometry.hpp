#pragma once

#include <cmath>

namespace uavmission {

/// Horizontal position in meters.
struct Point2D {
  double x{};
  double y{};

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
inline Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
inline Point2D operator*(double s, Point2D p) { return {s * p.x, s * p.y}; }
inline Point2D operator*(Point2D p, double s) { return s * p; }

inline double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }
inline double squared_norm(Point2D p) { return dot(p, p); }
inline double norm(Point2D p) { return std::hypot(p.x, p.y); }
inline double distance(Point2D a, Point2D b) { return norm(b - a); }

/// Point at fraction `s` of the way from `a` to `b`.
inline Point2D lerp(Point2D a, Point2D b, double s) { return a + s * (b - a); }

inline bool is_finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace uavmission
