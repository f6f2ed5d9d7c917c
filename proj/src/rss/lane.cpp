#include "rsstl/rss/lane.hpp"

#include <cmath>
#include <string>

namespace rsstl::rss {

bool LaneTrajectory::any_off_road() const {
  for (const auto& v : vehicles) {
    for (bool b : v.off_road) {
      if (b) return true;
    }
  }
  return false;
}

stl::Trace LaneTrajectory::to_trace() const {
  stl::Trace tr(dt);
  for (std::size_t k = 0; k < sim::kVehicles; ++k) {
    const std::string name(sim::WorldTrajectory::names()[k]);
    tr.add_channel(name + "_x", vehicles[k].x);
    tr.add_channel(name + "_y", vehicles[k].y);
    tr.add_channel(name + "_vx", vehicles[k].vx);
    tr.add_channel(name + "_vy", vehicles[k].vy);
  }
  return tr;
}

LaneTrajectory to_lane_coordinates(const sim::WorldTrajectory& world, const sim::SimConfig& road) {
  LaneTrajectory out;
  out.dt = world.dt;
  const double edge = road.road_half_width();
  for (std::size_t k = 0; k < sim::kVehicles; ++k) {
    auto& lane = out.vehicles[k];
    for (const auto& s : world.vehicles[k].states) {
      lane.x.push_back(s.x);
      lane.y.push_back(s.y);
      lane.vx.push_back(s.v * std::cos(s.theta));
      lane.vy.push_back(s.v * std::sin(s.theta));
      lane.off_road.push_back(std::abs(s.y) > edge);
    }
  }
  return out;
}

} // namespace rsstl::rss
