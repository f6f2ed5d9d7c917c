#pragma once

#include "rsstl/sim/config.hpp"
#include "rsstl/sim/trajectory.hpp"
#include "rsstl/stl/trace.hpp"

#include <array>
#include <vector>

namespace rsstl::rss {

/// One vehicle in road coordinates: x along the road, y to the left.
struct LaneTrack {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> vx;
  std::vector<double> vy;
  std::vector<bool> off_road;  // vehicle center beyond the road edge
};

struct LaneTrajectory {
  double dt = 0.0;
  std::array<LaneTrack, sim::kVehicles> vehicles;  // ego, a1, a2

  std::size_t size() const { return vehicles[0].x.size(); }
  bool any_off_road() const;

  /// Channels ego_x, ego_y, ego_vx, ego_vy, a1_x, ...
  stl::Trace to_trace() const;
};

/// Straight road along the world x axis: positions pass through, speed is
/// resolved into (vx, vy). Vehicles off the road are flagged, not rejected.
LaneTrajectory to_lane_coordinates(const sim::WorldTrajectory& world, const sim::SimConfig& road);

} // namespace rsstl::rss
