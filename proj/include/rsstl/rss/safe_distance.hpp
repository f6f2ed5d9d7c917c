#pragma once

#include "rsstl/rss/params.hpp"

#include <span>
#include <vector>

namespace rsstl::rss {

/// Minimum gap behind a front car: the rear car accelerates for rho, then
/// brakes at a_lon_min_br; the front car brakes at a_lon_max_br. Negative
/// speeds are treated as 0. Throws std::invalid_argument on non-finite input.
double lon_safe_distance(double v_rear, double v_front, const RssParams& p);

/// Minimum lateral gap between a left and a right car. Velocities are signed
/// toward the right. Each car accelerates toward the other for rho, then
/// brakes to zero lateral speed. Always at least mu.
double lat_safe_distance(double v_left, double v_right, const RssParams& p);

/// Central-difference lateral velocity, zeroed while the displacement over the
/// trailing rho window is below mu/2. Requires at least 2 samples.
std::vector<double> mu_lateral_velocity(std::span<const double> y, const RssParams& p);

} // namespace rsstl::rss
