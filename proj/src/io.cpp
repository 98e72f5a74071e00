#include "uavmission/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "uavmission/errors.hpp"

namespace uavmission::io {

using nlohmann::json;

namespace {

constexpr const char* kPlanFormat = "uav-mission-plan";
constexpr int kPlanVersion = 1;

double number(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(std::string("field '") + key + "' must be finite");
  return d;
}

Point2D xy_pair(const json& v, const std::string& what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError(what + " must be a [x, y] pair");
  }
  Point2D p{v[0].get<double>(), v[1].get<double>()};
  if (!is_finite(p)) throw ParseError(what + " must be finite");
  return p;
}

Point2D point(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return xy_pair(j.at(key), key);
}

json to_json(Point2D p) { return json::array({p.x, p.y}); }

json to_json(const FlightPrimitive& p) {
  return {{"kind", p.kind == PrimitiveKind::Segment ? "segment" : "hover"},
          {"from", to_json(p.from)},
          {"to", to_json(p.to)},
          {"duration_s", p.duration_s}};
}

FlightPrimitive primitive_from_json(const json& j) {
  FlightPrimitive p;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "segment") {
    p.kind = PrimitiveKind::Segment;
  } else if (kind == "hover") {
    p.kind = PrimitiveKind::Hover;
  } else {
    throw ParseError("unknown primitive kind '" + kind + "'");
  }
  p.from = point(j, "from");
  p.to = point(j, "to");
  p.duration_s = number(j, "duration_s");
  return p;
}

}  // namespace

MissionConfig ScenarioFile::to_config() const {
  MissionConfig cfg;
  cfg.radio.bandwidth_hz = bandwidth_hz;
  cfg.radio.tx_power_w = dbm_to_watts(tx_power_dbm);
  cfg.radio.ref_gain_linear = db_to_linear(ref_gain_db);
  cfg.radio.noise_w = dbm_to_watts(noise_dbm);
  cfg.radio.height_diff_m = uav_altitude_m - gbs_height_m;
  cfg.gbs = gbs_xy;
  cfg.start = start_xy;
  cfg.finish = finish_xy;
  cfg.v_max = v_max_mps;
  for (const ScenarioTarget& t : targets) {
    cfg.targets.push_back({t.xy, alpha * t.volume_bits, t.collect_time_s});
  }
  return cfg;
}

ScenarioFile parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");

  ScenarioFile s;
  s.bandwidth_hz = number(j, "bandwidth_hz");
  s.tx_power_dbm = number(j, "tx_power_dbm");
  s.ref_gain_db = number(j, "ref_gain_db");
  s.noise_dbm = number(j, "noise_dbm");
  s.v_max_mps = number(j, "v_max_mps");
  s.uav_altitude_m = number(j, "uav_altitude_m");
  s.gbs_height_m = number(j, "gbs_height_m");
  s.gbs_xy = point(j, "gbs_xy");
  s.start_xy = point(j, "start_xy");
  s.finish_xy = point(j, "finish_xy");
  s.alpha = j.contains("alpha") ? number(j, "alpha") : 1.0;

  if (!j.contains("targets") || !j.at("targets").is_array()) {
    throw ParseError("missing 'targets' array");
  }
  for (const json& t : j.at("targets")) {
    if (!t.is_object()) throw ParseError("each target must be an object");
    ScenarioTarget target;
    target.xy = point(t, "xy");
    target.volume_bits = number(t, "volume_bits");
    target.collect_time_s = t.contains("collect_time_s") ? number(t, "collect_time_s") : 0.0;
    s.targets.push_back(target);
  }

  if (!(s.bandwidth_hz > 0.0)) throw ParseError("bandwidth_hz must be positive");
  if (!(s.v_max_mps > 0.0)) throw ParseError("v_max_mps must be positive");
  if (!(s.uav_altitude_m > s.gbs_height_m)) {
    throw ParseError("uav_altitude_m must exceed gbs_height_m");
  }
  if (!(s.alpha >= 0.0)) throw ParseError("alpha must be >= 0");
  if (s.targets.empty()) throw ParseError("scenario needs at least one target");
  for (const ScenarioTarget& t : s.targets) {
    if (t.volume_bits < 0.0 || t.collect_time_s < 0.0) {
      throw ParseError("target volumes and collection times must be >= 0");
    }
  }
  return s;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_file(path));
}

std::string dump_scenario(const ScenarioFile& s) {
  json targets = json::array();
  for (const ScenarioTarget& t : s.targets) {
    targets.push_back({{"xy", to_json(t.xy)},
                       {"volume_bits", t.volume_bits},
                       {"collect_time_s", t.collect_time_s}});
  }
  const json j = {{"bandwidth_hz", s.bandwidth_hz},
                  {"tx_power_dbm", s.tx_power_dbm},
                  {"ref_gain_db", s.ref_gain_db},
                  {"noise_dbm", s.noise_dbm},
                  {"v_max_mps", s.v_max_mps},
                  {"uav_altitude_m", s.uav_altitude_m},
                  {"gbs_height_m", s.gbs_height_m},
                  {"gbs_xy", to_json(s.gbs_xy)},
                  {"start_xy", to_json(s.start_xy)},
                  {"finish_xy", to_json(s.finish_xy)},
                  {"alpha", s.alpha},
                  {"targets", targets}};
  return j.dump(2) + "\n";
}

std::string dump_plan(const MissionPlan& plan) {
  json instants = json::array();
  for (const CriticalInstants& ci : plan.critical_instants) {
    instants.push_back({{"t_in", ci.t_in}, {"t_out", ci.t_out}});
  }

  auto stage_json = [](const SubTrajectory& sub) {
    json prims = json::array();
    for (const FlightPrimitive& p : sub.primitives) prims.push_back(to_json(p));
    return json{{"kind", std::string(to_string(sub.kind))},
                {"duration_s", sub.duration_s},
                {"delivered_bits", sub.delivered_bits},
                {"turn_point", sub.turn_point ? to_json(*sub.turn_point) : json(nullptr)},
                {"hover_s", sub.hover_s},
                {"primitives", prims}};
  };

  json stages = json::array();
  for (const PlannedStage& st : plan.stages) {
    json s = stage_json(st.transit);
    s["target"] = st.target;
    s["collect_s"] = st.collect_s;
    stages.push_back(std::move(s));
  }

  json timeline = json::array();
  for (const TimedPrimitive& tp : plan.timeline) {
    json e = to_json(tp.primitive);
    e["t"] = tp.t_start;
    e["transmit"] = tp.transmitting;
    e["stage"] = tp.stage;
    timeline.push_back(std::move(e));
  }

  const json j = {{"format", kPlanFormat},
                  {"version", kPlanVersion},
                  {"n_targets", plan.order.order.size()},
                  {"order", plan.order.order},
                  {"order_cost_s", plan.order.cost_s},
                  {"total_time_s", plan.total_time_s},
                  {"critical_instants", instants},
                  {"initial_stage", stage_json(plan.initial)},
                  {"stages", stages},
                  {"timeline", timeline}};
  // nlohmann serializes doubles with round-trip (17 significant digit) precision.
  return j.dump(2) + "\n";
}

MissionPlan parse_plan(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("plan is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("format", std::string{}) != kPlanFormat) {
      throw ParseError("not a mission plan document");
    }
    MissionPlan plan;
    plan.order.order = j.at("order").get<std::vector<int>>();
    if (j.at("n_targets").get<std::size_t>() != plan.order.order.size()) {
      throw ParseError("n_targets does not match the order length");
    }
    plan.order.cost_s = j.value("order_cost_s", 0.0);
    plan.total_time_s = number(j, "total_time_s");
    for (const json& ci : j.at("critical_instants")) {
      plan.critical_instants.push_back({number(ci, "t_in"), number(ci, "t_out")});
    }

    auto stage_from_json = [](const json& s) {
      SubTrajectory sub;
      sub.kind = stage_kind_from_string(s.at("kind").get<std::string>());
      sub.duration_s = number(s, "duration_s");
      sub.delivered_bits = number(s, "delivered_bits");
      if (s.contains("turn_point") && !s.at("turn_point").is_null()) {
        sub.turn_point = xy_pair(s.at("turn_point"), "turn_point");
      }
      sub.hover_s = s.value("hover_s", 0.0);
      for (const json& p : s.at("primitives")) sub.primitives.push_back(primitive_from_json(p));
      return sub;
    };
    plan.initial = stage_from_json(j.at("initial_stage"));
    for (const json& s : j.at("stages")) {
      plan.stages.push_back({s.at("target").get<int>(), number(s, "collect_s"), stage_from_json(s)});
    }
    for (const json& e : j.at("timeline")) {
      plan.timeline.push_back({number(e, "t"), primitive_from_json(e), e.at("transmit").get<bool>(),
                               e.at("stage").get<std::string>()});
    }
    if (plan.critical_instants.size() != plan.order.order.size() ||
        plan.stages.size() != plan.order.order.size()) {
      throw ParseError("plan stage count does not match its order");
    }
    return plan;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed plan: ") + e.what());
  }
}

MissionPlan load_plan(const std::filesystem::path& path) { return parse_plan(read_file(path)); }

void write_samples_csv(std::ostream& os, const std::vector<TrajectorySample>& samples) {
  os << kSampleCsvHeader << '\n';
  const auto old_precision = os.precision(17);
  for (const TrajectorySample& s : samples) {
    os << s.t << ',' << s.position.x << ',' << s.position.y << ',' << s.rate_bps << ','
       << s.cumulative_bits << ',' << s.stage << '\n';
  }
  os.precision(old_precision);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace uavmission::io
