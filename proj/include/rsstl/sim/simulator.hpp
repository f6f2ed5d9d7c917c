#pragma once

#include "rsstl/sim/config.hpp"
#include "rsstl/sim/scenario.hpp"
#include "rsstl/sim/trajectory.hpp"

#include <span>

namespace rsstl::sim {

/// Lateral and speed schedule of one agent.
struct AgentManeuver {
  double y_init = 0.0;
  double y_target = 0.0;
  double v_target = 0.0;
  double t_start = 0.0;  // lateral move spans [t_start, t_start + duration]
  double duration = 2.0;
  double accel = 0.0;  // signed, applied from t_start until v_target is reached

  /// Smoothstep lateral reference.
  double y_ref(double t) const;
};

/// Maneuver of agent `index` (1 or 2) for a scenario; start time comes from the seed.
AgentManeuver make_maneuver(const ScenarioParams& s, int index, const SimConfig& cfg);

/// Pure pursuit on the lane centerline `path_y`, proportional speed control
/// bounded by a time headway to the closest leader in the corridor.
Control ego_controller_step(const VehicleState& self, double path_y, std::span<const VehicleState> others,
                            const SimConfig& cfg);

/// Agent controls; agents ignore everyone else.
Control agent_profile_step(const VehicleState& state, const AgentManeuver& m, double t, const SimConfig& cfg);

/// Forward Euler step of the kinematic bicycle.
VehicleState integrate(const VehicleState& s, const Control& c, double wheelbase, double dt);

/// Runs the scenario for cfg.duration. Throws std::out_of_range for a scenario
/// outside `box`, std::invalid_argument for a bad config.
WorldTrajectory simulate(const ScenarioParams& s, const SimConfig& cfg, const ScenarioBox& box = ScenarioBox::defaults());

} // namespace rsstl::sim
