#include "uavmission/channel.hpp"

#include <cmath>

#include "uavmission/errors.hpp"

namespace uavmission {

void RadioParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(bandwidth_hz)) throw InvalidInput("bandwidth must be positive");
  if (!positive(tx_power_w)) throw InvalidInput("transmit power must be positive");
  if (!positive(ref_gain_linear)) throw InvalidInput("reference gain must be positive");
  if (!positive(noise_w)) throw InvalidInput("noise power must be positive");
  if (!positive(height_diff_m)) throw InvalidInput("UAV must fly above the GBS antenna");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double distance3d(Point2D u, Point2D g, const RadioParams& radio) {
  const double h = radio.height_diff_m;
  return std::sqrt(squared_norm(u - g) + h * h);
}

double rate_bps(Point2D u, Point2D g, const RadioParams& radio) {
  const double h = radio.height_diff_m;
  const double d2 = squared_norm(u - g) + h * h;
  return radio.bandwidth_hz * std::log2(1.0 + radio.reference_snr() / d2);
}

}  // namespace uavmission
