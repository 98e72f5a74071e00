#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "uavmission/config.hpp"
#include "uavmission/mission.hpp"

namespace uavmission::io {

/// Scenario document as written by hand: powers in dBm, gain in dB,
/// reference volumes before the alpha scaling.
struct ScenarioTarget {
  Point2D xy;
  double volume_bits = 0.0;
  double collect_time_s = 0.0;
};

struct ScenarioFile {
  double bandwidth_hz = 0.0;
  double tx_power_dbm = 0.0;
  double ref_gain_db = 0.0;
  double noise_dbm = 0.0;
  double v_max_mps = 0.0;
  double uav_altitude_m = 0.0;
  double gbs_height_m = 0.0;
  Point2D gbs_xy;
  Point2D start_xy;
  Point2D finish_xy;
  double alpha = 1.0;
  std::vector<ScenarioTarget> targets;

  /// Converts to SI linear units and applies alpha to every volume.
  MissionConfig to_config() const;
};

/// Parse errors and invariant violations both raise ParseError.
ScenarioFile parse_scenario(const std::string& text);
ScenarioFile load_scenario(const std::filesystem::path& path);
std::string dump_scenario(const ScenarioFile& scenario);

std::string dump_plan(const MissionPlan& plan);
/// Throws ParseError on malformed documents.
MissionPlan parse_plan(const std::string& text);
MissionPlan load_plan(const std::filesystem::path& path);

inline constexpr const char* kSampleCsvHeader = "t,x,y,rate_bps,cum_bits,stage";

void write_samples_csv(std::ostream& os, const std::vector<TrajectorySample>& samples);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace uavmission::io
