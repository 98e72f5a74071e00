#pragma once

#include "uavmission/geometry.hpp"

namespace uavmission {

/// Line-of-sight link budget between the UAV and the ground base station.
/// All quantities are SI linear units; dB conversion happens at ingestion.
struct RadioParams {
  double bandwidth_hz = 0.0;
  double tx_power_w = 0.0;
  double ref_gain_linear = 0.0;  // channel power gain at 1 m
  double noise_w = 0.0;
  double height_diff_m = 0.0;    // UAV altitude minus GBS antenna height

  /// Throws InvalidInput unless every field is finite and strictly positive.
  void validate() const;

  /// Received SNR at unit squared distance, P * beta0 / sigma^2.
  double reference_snr() const { return tx_power_w * ref_gain_linear / noise_w; }
};

double dbm_to_watts(double dbm);
double db_to_linear(double db);

/// Slant range from a UAV at horizontal position `u` to the GBS at `g`.
double distance3d(Point2D u, Point2D g, const RadioParams& radio);

/// Achievable rate B log2(1 + P beta0 / (sigma^2 d^2)) at horizontal position `u`.
/// This is the positional rate only; whether the UAV is allowed to transmit at
/// a given instant is decided by the mission timeline.
double rate_bps(Point2D u, Point2D g, const RadioParams& radio);

}  // namespace uavmission
