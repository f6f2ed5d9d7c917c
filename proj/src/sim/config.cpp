#include "rsstl/sim/config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rsstl::sim {

namespace {

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0)) throw std::invalid_argument(std::string("sim: ") + name + " must be positive");
}

} // namespace

void SimConfig::validate() const {
  require_positive(dt, "dt");
  require_positive(duration, "duration");
  require_positive(lane_width, "lane_width");
  require_positive(target_speed, "target_speed");
  require_positive(vehicle.length, "vehicle.length");
  require_positive(vehicle.width, "vehicle.width");
  require_positive(vehicle.wheelbase, "vehicle.wheelbase");
  require_positive(ego.lookahead, "ego.lookahead");
  require_positive(ego.max_steer, "ego.max_steer");
  require_positive(ego.speed_gain, "ego.speed_gain");
  require_positive(ego.headway, "ego.headway");
  require_positive(ego.max_decel, "ego.max_decel");
  require_positive(ego.max_accel, "ego.max_accel");
  require_positive(ego.leader_range, "ego.leader_range");
  require_positive(ego.corridor_half_width, "ego.corridor_half_width");
  require_positive(agent.maneuver_duration, "agent.maneuver_duration");
  require_positive(agent.max_accel, "agent.max_accel");
  require_positive(agent.max_heading, "agent.max_heading");
  if (!(agent.start_min >= 0.0 && agent.start_min <= agent.start_max))
    throw std::invalid_argument("sim: agent start window is empty");
  if (num_lanes < 1) throw std::invalid_argument("sim: num_lanes must be at least 1");
  const double steps = duration / dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * steps)
    throw std::invalid_argument("sim: duration must be a multiple of dt");
}

std::size_t SimConfig::samples() const { return static_cast<std::size_t>(std::llround(duration / dt)) + 1; }

std::vector<double> SimConfig::lane_centers() const {
  std::vector<double> c;
  for (int k = 0; k < num_lanes; ++k) c.push_back((k - 0.5 * (num_lanes - 1)) * lane_width);
  return c;
}

double SimConfig::nearest_lane_center(double y) const {
  double best = 0.0;
  double best_d = INFINITY;
  for (double c : lane_centers()) {
    if (std::abs(y - c) < best_d) {
      best_d = std::abs(y - c);
      best = c;
    }
  }
  return best;
}

} // namespace rsstl::sim
