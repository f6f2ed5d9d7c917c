#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rsstl::sim {

struct VehicleState {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double v = 0.0;
};

struct Control {
  double accel = 0.0;
  double steer = 0.0;
};

/// Per-sample states of one vehicle plus the controls applied from that sample.
struct VehicleTrack {
  std::vector<VehicleState> states;
  std::vector<Control> controls;
};

inline constexpr std::size_t kVehicles = 3;

/// World-frame trajectories of ego, a1 and a2 on one time base.
struct WorldTrajectory {
  double dt = 0.0;
  std::array<VehicleTrack, kVehicles> vehicles;  // ego, a1, a2

  const VehicleTrack& ego() const { return vehicles[0]; }
  std::size_t size() const { return vehicles[0].states.size(); }

  static const std::array<std::string_view, kVehicles>& names();

  /// Wide CSV: t,ego_x,ego_y,ego_theta,ego_v,a1_x,...,a2_v
  void write_csv(std::ostream& out) const;
  std::string to_csv() const;
};

} // namespace rsstl::sim
