#pragma once

#include "rsstl/sim/config.hpp"
#include "rsstl/sim/trajectory.hpp"

#include <string>

namespace rsstl::cli {

/// Top view of the road with each vehicle's path and its footprint every
/// second. Longitudinal and lateral scales differ so the lanes stay readable.
std::string trajectory_svg(const sim::WorldTrajectory& world, const sim::SimConfig& cfg);

} // namespace rsstl::cli
