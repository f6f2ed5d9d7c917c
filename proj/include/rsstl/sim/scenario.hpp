#pragma once

#include "rsstl/sim/rng.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace rsstl::sim {

inline constexpr std::size_t kScenarioDims = 14;

struct EgoInit {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
  friend bool operator==(const EgoInit&, const EgoInit&) = default;
};

struct AgentInit {
  double x = 0.0;
  double y = 0.0;
  double v = 0.0;
  double y_target = 0.0;
  double v_target = 0.0;
  friend bool operator==(const AgentInit&, const AgentInit&) = default;
};

/// One test case: initial conditions of the three vehicles and the agents'
/// maneuver targets. `seed` drives the remaining randomness (maneuver timing).
struct ScenarioParams {
  EgoInit ego;
  AgentInit a1;
  AgentInit a2;
  std::uint64_t seed = 0;

  /// Order: ego x,y,theta,v; a1 x,y,v,y_target,v_target; a2 likewise.
  std::array<double, kScenarioDims> to_vector() const;
  static ScenarioParams from_vector(const std::array<double, kScenarioDims>& v, std::uint64_t seed);

  friend bool operator==(const ScenarioParams&, const ScenarioParams&) = default;
};

/// Field names in to_vector order (x_init_ego, ..., v_a2).
const std::array<std::string_view, kScenarioDims>& scenario_field_names();

struct Range {
  double lo;
  double hi;
  double width() const { return hi - lo; }
  bool contains(double v) const { return v >= lo && v <= hi; }
};

/// Box of admissible scenarios; defaults are the case-study ranges.
struct ScenarioBox {
  std::array<Range, kScenarioDims> ranges;

  static ScenarioBox defaults();

  /// Throws std::out_of_range naming the first field outside its range.
  void check(const ScenarioParams& s) const;
  bool contains(const ScenarioParams& s) const;

  /// Maps between the box and the unit cube (degenerate ranges map to 0).
  std::array<double, kScenarioDims> normalize(const ScenarioParams& s) const;
  ScenarioParams denormalize(const std::array<double, kScenarioDims>& u, std::uint64_t seed) const;
};

/// Independent uniform draw per dimension. The scenario seed is taken from
/// the generator as well. Throws std::invalid_argument for an inverted range.
ScenarioParams sample_scenario(SplitMix64& rng, const ScenarioBox& box);

} // namespace rsstl::sim
