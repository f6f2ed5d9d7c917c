#pragma once

#include "rsstl/rss/lane.hpp"
#include "rsstl/rss/params.hpp"
#include "rsstl/sim/config.hpp"
#include "rsstl/stl/trace.hpp"

#include <array>
#include <string_view>

namespace rsstl::rss {

namespace channel {
inline constexpr std::string_view S_lon = "S_lon";
inline constexpr std::string_view S_lat = "S_lat";
inline constexpr std::string_view A_lon_maxAcc = "A_lon_maxAcc";
inline constexpr std::string_view A_lon_minBr = "A_lon_minBr";
inline constexpr std::string_view A_lat_maxAcc = "A_lat_maxAcc";
inline constexpr std::string_view A_lat_minBr = "A_lat_minBr";
inline constexpr std::string_view V_lat_stop = "V_lat_stop";
inline constexpr std::string_view V_lat_neg = "V_lat_neg";
inline constexpr std::string_view dx_a1 = "dx_a1";
inline constexpr std::string_view dy_a1 = "dy_a1";
inline constexpr std::string_view dx_a2 = "dx_a2";
inline constexpr std::string_view dy_a2 = "dy_a2";
} // namespace channel

/// All channels of a predicate trace, in output order.
const std::array<std::string_view, 12>& predicate_channels();

struct PredicateOptions {
  sim::VehicleGeometry vehicle;
  double lane_width = 3.5;      // lateral center distance below which a car shares the ego corridor
  double sensing_range = 200.0;  // stand-in leader distance when nobody is ahead
  double lateral_range = 10.5;   // stand-in lateral center distance when nobody is alongside
  double v_eps = 0.01;           // zero lateral speed tolerance (m/s)
};

/// Margins of the RSS atoms plus bumper gaps to both agents. S_lon pairs the
/// ego with cars ahead in its corridor, S_lat with cars closer than their
/// longitudinal safe distance; the tightest agent wins and also fixes the
/// "toward" side of the lateral channels.
/// Throws std::invalid_argument if the trajectory dt differs from p.dt or it
/// has fewer than 2 samples.
stl::Trace build_predicate_trace(const LaneTrajectory& lane, const RssParams& p, const PredicateOptions& opt = {});

} // namespace rsstl::rss
