#include "rsstl/rss/predicates.hpp"

#include "rsstl/rss/safe_distance.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rsstl::rss {

const std::array<std::string_view, 12>& predicate_channels() {
  static constexpr std::array<std::string_view, 12> names{
      channel::S_lon,      channel::S_lat,     channel::A_lon_maxAcc, channel::A_lon_minBr,
      channel::A_lat_maxAcc, channel::A_lat_minBr, channel::V_lat_stop, channel::V_lat_neg,
      channel::dx_a1,      channel::dy_a1,     channel::dx_a2,        channel::dy_a2};
  return names;
}

namespace {

// Backward difference; the first sample copies the second.
std::vector<double> backward_difference(const std::vector<double>& v, double dt) {
  std::vector<double> a(v.size());
  for (std::size_t i = 1; i < v.size(); ++i) a[i] = (v[i] - v[i - 1]) / dt;
  a[0] = a[1];
  return a;
}

} // namespace

stl::Trace build_predicate_trace(const LaneTrajectory& lane, const RssParams& p, const PredicateOptions& opt) {
  p.validate();
  const std::size_t n = lane.size();
  if (n < 2) throw std::invalid_argument("build_predicate_trace: need at least 2 samples");
  if (std::abs(lane.dt - p.dt) > 1e-12 * p.dt)
    throw std::invalid_argument("build_predicate_trace: trajectory dt differs from rss dt");
  for (const auto& v : lane.vehicles) {
    if (v.x.size() != n || v.y.size() != n || v.vx.size() != n || v.vy.size() != n)
      throw std::invalid_argument("build_predicate_trace: vehicle tracks are not aligned");
  }

  const auto& ego = lane.vehicles[0];
  const double length = opt.vehicle.length;
  const double width = opt.vehicle.width;
  const auto a_lon = backward_difference(ego.vx, p.dt);
  const auto a_lat = backward_difference(ego.vy, p.dt);
  std::array<std::vector<double>, sim::kVehicles> v_mu;
  for (std::size_t k = 0; k < sim::kVehicles; ++k) v_mu[k] = mu_lateral_velocity(lane.vehicles[k].y, p);

  std::array<std::vector<double>, 12> out;
  for (auto& c : out) c.resize(n);

  for (std::size_t i = 0; i < n; ++i) {
    double s_lon = std::numeric_limits<double>::infinity();
    double s_lat = std::numeric_limits<double>::infinity();
    double toward = 1.0;  // +1: the constraining car is on the ego's left
    for (std::size_t k = 1; k < sim::kVehicles; ++k) {
      const auto& a = lane.vehicles[k];
      const double dx = a.x[i] - ego.x[i];
      const double dy = a.y[i] - ego.y[i];
      if (dx > 0.0 && std::abs(dy) < opt.lane_width)
        s_lon = std::min(s_lon, (dx - length) - lon_safe_distance(ego.vx[i], a.vx[i], p));

      // only cars inside their longitudinal safe distance constrain the ego laterally
      const double lon_need = dx > 0.0 ? lon_safe_distance(ego.vx[i], a.vx[i], p)
                                       : lon_safe_distance(a.vx[i], ego.vx[i], p);
      if (std::abs(dx) - length < lon_need) {
        // lateral velocities signed toward the right
        const bool agent_left = dy >= 0.0;
        const double v_left = agent_left ? -v_mu[k][i] : -v_mu[0][i];
        const double v_right = agent_left ? -v_mu[0][i] : -v_mu[k][i];
        const double m = (std::abs(dy) - width) - lat_safe_distance(v_left, v_right, p);
        if (m < s_lat) {
          s_lat = m;
          toward = agent_left ? 1.0 : -1.0;
        }
      }
      out[8 + 2 * (k - 1)][i] = std::abs(dx) - length;
      out[9 + 2 * (k - 1)][i] = std::abs(dy) - width;
    }
    if (!std::isfinite(s_lon))
      s_lon = (opt.sensing_range - length) - lon_safe_distance(ego.vx[i], ego.vx[i], p);
    if (!std::isfinite(s_lat)) s_lat = (opt.lateral_range - width) - lat_safe_distance(0.0, 0.0, p);

    out[0][i] = s_lon;
    out[1][i] = s_lat;
    out[2][i] = p.a_lon_max_acc - a_lon[i];
    out[3][i] = -a_lon[i] - p.a_lon_min_br;
    out[4][i] = p.a_lat_max_acc - std::abs(a_lat[i]);
    out[5][i] = -toward * a_lat[i] - p.a_lat_min_br;
    out[6][i] = opt.v_eps - std::abs(v_mu[0][i]);
    out[7][i] = opt.v_eps - toward * v_mu[0][i];
  }

  stl::Trace tr(p.dt);
  const auto& names = predicate_channels();
  for (std::size_t c = 0; c < names.size(); ++c) {
    for (auto& v : out[c]) v = v == 0.0 ? 0.0 : v;
    tr.add_channel(std::string(names[c]), std::move(out[c]));
  }
  return tr;
}

} // namespace rsstl::rss
