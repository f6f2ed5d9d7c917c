#include "rsstl/cli/run_config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rsstl::cli {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void require_object(const json& j, const std::string& what) {
  if (!j.is_object()) throw std::invalid_argument(what + ": expected a JSON object");
}

// Reads the listed numeric fields; any other key is rejected.
template <class T>
void read_fields(const json& j, const std::string& what, std::vector<std::pair<const char*, T*>> fields) {
  require_object(j, what);
  for (const auto& [k, v] : j.items()) {
    bool found = false;
    for (auto& [name, ptr] : fields) {
      if (k == name) {
        if (!v.is_number()) throw std::invalid_argument(what + "." + k + ": expected a number");
        *ptr = v.template get<T>();
        found = true;
      }
    }
    if (!found) throw std::invalid_argument(what + ": unknown key '" + k + "'");
  }
}

} // namespace

falsify::ObjectiveSpec RunConfig::objective(falsify::SpecKind spec) const {
  falsify::ObjectiveSpec o;
  o.spec = spec;
  o.rss = rss;
  o.cas = cas;
  o.sim = sim;
  o.box = box;
  return o;
}

sim::SimConfig sim_config_from_json(const json& j) {
  require_object(j, "sim");
  sim::SimConfig c;
  json top = json::object();
  for (const auto& [k, v] : j.items()) {
    if (k == "vehicle") {
      read_fields<double>(v, "sim.vehicle",
                          {{"length", &c.vehicle.length}, {"width", &c.vehicle.width}, {"wheelbase", &c.vehicle.wheelbase}});
    } else if (k == "ego") {
      read_fields<double>(v, "sim.ego",
                          {{"lookahead", &c.ego.lookahead},
                           {"max_steer", &c.ego.max_steer},
                           {"speed_gain", &c.ego.speed_gain},
                           {"headway", &c.ego.headway},
                           {"max_decel", &c.ego.max_decel},
                           {"max_accel", &c.ego.max_accel},
                           {"leader_range", &c.ego.leader_range},
                           {"corridor_half_width", &c.ego.corridor_half_width}});
    } else if (k == "agent") {
      read_fields<double>(v, "sim.agent",
                          {{"maneuver_duration", &c.agent.maneuver_duration},
                           {"start_min", &c.agent.start_min},
                           {"start_max", &c.agent.start_max},
                           {"max_accel", &c.agent.max_accel},
                           {"max_heading", &c.agent.max_heading}});
    } else if (k == "num_lanes") {
      if (!v.is_number_integer()) throw std::invalid_argument("sim.num_lanes: expected an integer");
      c.num_lanes = v.get<int>();
    } else {
      top[k] = v;
    }
  }
  read_fields<double>(top, "sim",
                      {{"dt", &c.dt}, {"duration", &c.duration}, {"lane_width", &c.lane_width},
                       {"target_speed", &c.target_speed}});
  c.validate();
  return c;
}

json to_json(const sim::SimConfig& c) {
  return {{"dt", c.dt},
          {"duration", c.duration},
          {"lane_width", c.lane_width},
          {"num_lanes", c.num_lanes},
          {"target_speed", c.target_speed},
          {"vehicle", {{"length", c.vehicle.length}, {"width", c.vehicle.width}, {"wheelbase", c.vehicle.wheelbase}}},
          {"ego",
           {{"lookahead", c.ego.lookahead},
            {"max_steer", c.ego.max_steer},
            {"speed_gain", c.ego.speed_gain},
            {"headway", c.ego.headway},
            {"max_decel", c.ego.max_decel},
            {"max_accel", c.ego.max_accel},
            {"leader_range", c.ego.leader_range},
            {"corridor_half_width", c.ego.corridor_half_width}}},
          {"agent",
           {{"maneuver_duration", c.agent.maneuver_duration},
            {"start_min", c.agent.start_min},
            {"start_max", c.agent.start_max},
            {"max_accel", c.agent.max_accel},
            {"max_heading", c.agent.max_heading}}}};
}

RunConfig run_config_from_json(const json& j) {
  require_object(j, "config");
  RunConfig c;
  for (const auto& [k, v] : j.items()) {
    if (k == "rss") {
      c.rss = rss::rss_params_from_json(v);
    } else if (k == "cas") {
      c.cas = rss::cas_params_from_json(v);
    } else if (k == "sim") {
      c.sim = sim_config_from_json(v);
    } else if (k == "box") {
      require_object(v, "box");
      const auto& names = sim::scenario_field_names();
      for (const auto& [field, range] : v.items()) {
        std::size_t idx = names.size();
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (names[i] == field) idx = i;
        }
        if (idx == names.size()) throw std::invalid_argument("box: unknown field '" + field + "'");
        if (!range.is_array() || range.size() != 2 || !range[0].is_number() || !range[1].is_number())
          throw std::invalid_argument("box." + field + ": expected [lo, hi]");
        c.box.ranges[idx] = {range[0].get<double>(), range[1].get<double>()};
        if (!(c.box.ranges[idx].lo <= c.box.ranges[idx].hi))
          throw std::invalid_argument("box." + field + ": lo exceeds hi");
      }
    } else if (k == "sa") {
      double warmup = static_cast<double>(c.sa.warmup);
      read_fields<double>(v, "sa",
                          {{"warmup", &warmup},
                           {"final_ratio", &c.sa.final_ratio},
                           {"clamp", &c.sa.clamp},
                           {"min_step", &c.sa.min_step},
                           {"grow", &c.sa.grow},
                           {"shrink", &c.sa.shrink}});
      if (!(warmup >= 1) || warmup != static_cast<double>(static_cast<std::size_t>(warmup)))
        throw std::invalid_argument("sa.warmup: expected a positive integer");
      c.sa.warmup = static_cast<std::size_t>(warmup);
      if (!(c.sa.final_ratio > 0 && c.sa.final_ratio <= 1)) throw std::invalid_argument("sa.final_ratio: must be in (0, 1]");
    } else {
      throw std::invalid_argument("config: unknown section '" + k + "'");
    }
  }
  return c;
}

json to_json(const RunConfig& c) {
  json box = json::object();
  const auto& names = sim::scenario_field_names();
  for (std::size_t i = 0; i < names.size(); ++i) box[std::string(names[i])] = {c.box.ranges[i].lo, c.box.ranges[i].hi};
  return {{"rss", rss::to_json(c.rss)},
          {"cas", rss::to_json(c.cas)},
          {"sim", to_json(c.sim)},
          {"box", box},
          {"sa",
           {{"warmup", c.sa.warmup},
            {"final_ratio", c.sa.final_ratio},
            {"clamp", c.sa.clamp},
            {"min_step", c.sa.min_step},
            {"grow", c.sa.grow},
            {"shrink", c.sa.shrink}}}};
}

RunConfig load_run_config(const std::string& path) { return run_config_from_json(parse_file(path)); }

sim::ScenarioParams scenario_from_json(const json& j) {
  require_object(j, "scenario");
  const auto& names = sim::scenario_field_names();
  std::array<double, sim::kScenarioDims> v{};
  std::uint64_t seed = 0;
  for (const auto& [k, val] : j.items()) {
    if (k == "seed") {
      if (!val.is_number_unsigned()) throw std::invalid_argument("scenario.seed: expected a non-negative integer");
      seed = val.get<std::uint64_t>();
      continue;
    }
    bool known = false;
    for (auto n : names) known = known || n == k;
    if (!known) throw std::invalid_argument("scenario: unknown field '" + k + "'");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto it = j.find(std::string(names[i]));
    if (it == j.end()) throw std::invalid_argument("scenario: missing field '" + std::string(names[i]) + "'");
    if (!it->is_number()) throw std::invalid_argument("scenario." + std::string(names[i]) + ": expected a number");
    v[i] = it->get<double>();
  }
  return sim::ScenarioParams::from_vector(v, seed);
}

json to_json(const sim::ScenarioParams& s) {
  json j = json::object();
  const auto v = s.to_vector();
  const auto& names = sim::scenario_field_names();
  for (std::size_t i = 0; i < names.size(); ++i) j[std::string(names[i])] = v[i];
  j["seed"] = s.seed;
  return j;
}

sim::ScenarioParams load_scenario(const std::string& path) { return scenario_from_json(parse_file(path)); }

} // namespace rsstl::cli
