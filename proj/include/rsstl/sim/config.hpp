#pragma once

#include <cstddef>
#include <vector>

namespace rsstl::sim {

struct VehicleGeometry {
  double length = 4.8;
  double width = 1.8;
  double wheelbase = 2.9;
};

struct EgoGains {
  double lookahead = 15.0;    // pure-pursuit lookahead (m)
  double max_steer = 0.6;     // rad
  double speed_gain = 1.0;    // 1/s
  double headway = 1.2;       // s
  double max_decel = 6.0;     // m/s^2
  double max_accel = 6.0;     // m/s^2
  double leader_range = 150.0;
  double corridor_half_width = 3.5;  // leaders: center |dy| below this
};

struct AgentProfile {
  double maneuver_duration = 2.0;
  double start_min = 1.0;
  double start_max = 5.0;
  double max_accel = 10.0;
  double max_heading = 0.5;   // rad
};

struct SimConfig {
  double dt = 0.01;
  double duration = 10.0;
  double lane_width = 3.5;
  int num_lanes = 3;
  double target_speed = 25.0;
  VehicleGeometry vehicle;
  EgoGains ego;
  AgentProfile agent;

  /// Throws std::invalid_argument when a field is out of its domain.
  void validate() const;

  /// duration / dt + 1.
  std::size_t samples() const;

  /// Lane centerlines in the lane frame; the middle lane is at y = 0.
  std::vector<double> lane_centers() const;
  double road_half_width() const { return 0.5 * num_lanes * lane_width; }
  double nearest_lane_center(double y) const;
};

} // namespace rsstl::sim
