#include "uavmission/config.hpp"

#include <cmath>
#include <string>

#include "uavmission/errors.hpp"

namespace uavmission {

Point2D MissionConfig::vertex_position(int v) const {
  if (v == 0) return start;
  if (v == num_targets() + 1) return finish;
  if (v < 0 || v > num_targets() + 1) throw InvalidInput("vertex index out of range");
  return targets[static_cast<std::size_t>(v - 1)].position;
}

double MissionConfig::vertex_volume(int v) const {
  if (v <= 0 || v > num_targets()) return 0.0;
  return targets[static_cast<std::size_t>(v - 1)].volume_bits;
}

void MissionConfig::validate() const {
  radio.validate();
  if (!(std::isfinite(v_max) && v_max > 0.0)) throw InvalidInput("v_max must be positive");
  if (targets.empty()) throw InvalidInput("mission needs at least one target");
  if (!is_finite(gbs) || !is_finite(start) || !is_finite(finish)) {
    throw InvalidInput("non-finite coordinate");
  }
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const Target& t = targets[k];
    const std::string which = "target " + std::to_string(k + 1);
    if (!is_finite(t.position)) throw InvalidInput(which + ": non-finite position");
    if (!(std::isfinite(t.volume_bits) && t.volume_bits >= 0.0)) {
      throw InvalidInput(which + ": volume must be >= 0");
    }
    if (!(std::isfinite(t.collect_time_s) && t.collect_time_s >= 0.0)) {
      throw InvalidInput(which + ": collection time must be >= 0");
    }
  }
}

}  // namespace uavmission
