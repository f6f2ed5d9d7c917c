#pragma once

#include "rsstl/falsify/anneal.hpp"
#include "rsstl/falsify/objective.hpp"
#include "rsstl/rss/params.hpp"
#include "rsstl/sim/config.hpp"
#include "rsstl/sim/scenario.hpp"

#include <json.hpp>

#include <string>

namespace rsstl::cli {

/// Everything a run reads from --config. Sections: rss, cas, sim, box, sa.
/// Missing keys keep their defaults; unknown keys are an error.
struct RunConfig {
  rss::RssParams rss;
  rss::CasParams cas;
  sim::SimConfig sim;
  sim::ScenarioBox box = sim::ScenarioBox::defaults();
  falsify::AnnealOptions sa;

  falsify::ObjectiveSpec objective(falsify::SpecKind spec) const;
};

RunConfig run_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& c);
RunConfig load_run_config(const std::string& path);

sim::SimConfig sim_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const sim::SimConfig& c);

/// Scenario file: an object keyed by the scenario field names plus "seed".
/// All 14 fields are required.
sim::ScenarioParams scenario_from_json(const nlohmann::json& j);
nlohmann::json to_json(const sim::ScenarioParams& s);
sim::ScenarioParams load_scenario(const std::string& path);

} // namespace rsstl::cli
