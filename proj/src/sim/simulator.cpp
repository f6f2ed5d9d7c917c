#include "rsstl/sim/simulator.hpp"

#include "rsstl/sim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsstl::sim {

double AgentManeuver::y_ref(double t) const {
  const double u = std::clamp((t - t_start) / duration, 0.0, 1.0);
  return y_init + (y_target - y_init) * u * u * (3.0 - 2.0 * u);
}

AgentManeuver make_maneuver(const ScenarioParams& s, int index, const SimConfig& cfg) {
  if (index != 1 && index != 2) throw std::invalid_argument("make_maneuver: agent index must be 1 or 2");
  const AgentInit& a = index == 1 ? s.a1 : s.a2;
  SplitMix64 rng(SplitMix64::derive(s.seed, static_cast<std::uint64_t>(index)));
  AgentManeuver m;
  m.y_init = a.y;
  m.y_target = a.y_target;
  m.v_target = a.v_target;
  m.duration = cfg.agent.maneuver_duration;
  m.t_start = rng.uniform(cfg.agent.start_min, cfg.agent.start_max);
  m.accel = std::clamp((a.v_target - a.v) / m.duration, -cfg.agent.max_accel, cfg.agent.max_accel);
  return m;
}

Control ego_controller_step(const VehicleState& self, double path_y, std::span<const VehicleState> others,
                            const SimConfig& cfg) {
  const auto& g = cfg.ego;
  Control c;

  // pure pursuit toward a point on the centerline one lookahead ahead
  const double alpha = std::atan2(path_y - self.y, g.lookahead) - self.theta;
  c.steer = std::atan(2.0 * cfg.vehicle.wheelbase * std::sin(alpha) / g.lookahead);
  c.steer = std::clamp(c.steer, -g.max_steer, g.max_steer);

  double v_des = cfg.target_speed;
  for (const auto& o : others) {
    const double dx = o.x - self.x;
    if (dx <= 0.0 || dx > g.leader_range || std::abs(o.y - self.y) >= g.corridor_half_width) continue;
    const double gap = std::max(0.0, dx - cfg.vehicle.length);
    v_des = std::min(v_des, gap / g.headway);
  }
  c.accel = std::clamp(g.speed_gain * (v_des - self.v), -g.max_decel, g.max_accel);
  // never reverse
  if (self.v + c.accel * cfg.dt < 0.0) c.accel = -self.v / cfg.dt;
  return c;
}

Control agent_profile_step(const VehicleState& state, const AgentManeuver& m, double t, const SimConfig& cfg) {
  Control c;
  if (t >= m.t_start && state.v != m.v_target) {
    const double to_go = (m.v_target - state.v) / cfg.dt;
    c.accel = std::abs(to_go) < std::abs(m.accel) ? to_go : m.accel;
    if (m.accel == 0.0) c.accel = 0.0;
  }
  if (state.v + c.accel * cfg.dt < 0.0) c.accel = -state.v / cfg.dt;

  if (state.v > 1e-6) {
    // Heading chosen now acts one step later, so aim two samples ahead.
    const double y_next = state.y + state.v * std::sin(state.theta) * cfg.dt;
    const double s_max = std::sin(cfg.agent.max_heading);
    const double sin_des = (m.y_ref(t + 2.0 * cfg.dt) - y_next) / (state.v * cfg.dt);
    const double theta_des = std::asin(std::clamp(sin_des, -s_max, s_max));
    c.steer = std::atan((theta_des - state.theta) * cfg.vehicle.wheelbase / (state.v * cfg.dt));
  }
  return c;
}

VehicleState integrate(const VehicleState& s, const Control& c, double wheelbase, double dt) {
  VehicleState n;
  n.x = s.x + s.v * std::cos(s.theta) * dt;
  n.y = s.y + s.v * std::sin(s.theta) * dt;
  n.theta = s.theta + s.v / wheelbase * std::tan(c.steer) * dt;
  n.v = std::max(0.0, s.v + c.accel * dt);
  return n;
}

WorldTrajectory simulate(const ScenarioParams& s, const SimConfig& cfg, const ScenarioBox& box) {
  cfg.validate();
  box.check(s);
  const std::size_t n = cfg.samples();
  const AgentManeuver m1 = make_maneuver(s, 1, cfg);
  const AgentManeuver m2 = make_maneuver(s, 2, cfg);
  const double path_y = cfg.nearest_lane_center(s.ego.y);

  std::array<VehicleState, kVehicles> state{
      VehicleState{s.ego.x, s.ego.y, s.ego.theta, s.ego.v},
      VehicleState{s.a1.x, s.a1.y, 0.0, s.a1.v},
      VehicleState{s.a2.x, s.a2.y, 0.0, s.a2.v},
  };

  WorldTrajectory out;
  out.dt = cfg.dt;
  for (auto& v : out.vehicles) {
    v.states.reserve(n);
    v.controls.reserve(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * cfg.dt;
    const std::array<VehicleState, 2> agents{state[1], state[2]};
    const std::array<Control, kVehicles> u{
        ego_controller_step(state[0], path_y, agents, cfg),
        agent_profile_step(state[1], m1, t, cfg),
        agent_profile_step(state[2], m2, t, cfg),
    };
    for (std::size_t k = 0; k < kVehicles; ++k) {
      out.vehicles[k].states.push_back(state[k]);
      out.vehicles[k].controls.push_back(u[k]);
      state[k] = integrate(state[k], u[k], cfg.vehicle.wheelbase, cfg.dt);
    }
  }
  return out;
}

} // namespace rsstl::sim
