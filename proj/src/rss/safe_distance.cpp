#include "rsstl/rss/safe_distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsstl::rss {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite velocity");
}

double signed_square(double v) { return v * std::abs(v); }

} // namespace

double lon_safe_distance(double v_rear, double v_front, const RssParams& p) {
  require_finite(v_rear, "lon_safe_distance");
  require_finite(v_front, "lon_safe_distance");
  const double vr = std::max(0.0, v_rear);
  const double vf = std::max(0.0, v_front);
  const double v_rho = vr + p.rho * p.a_lon_max_acc;
  const double d = vr * p.rho + 0.5 * p.a_lon_max_acc * p.rho * p.rho + v_rho * v_rho / (2.0 * p.a_lon_min_br) -
                   vf * vf / (2.0 * p.a_lon_max_br);
  return std::max(0.0, d);
}

double lat_safe_distance(double v_left, double v_right, const RssParams& p) {
  require_finite(v_left, "lat_safe_distance");
  require_finite(v_right, "lat_safe_distance");
  const double v1 = v_left + p.rho * p.a_lat_max_acc;
  const double v2 = v_right - p.rho * p.a_lat_max_acc;
  const double left_travel = 0.5 * (v_left + v1) * p.rho + signed_square(v1) / (2.0 * p.a_lat_min_br);
  const double right_travel = 0.5 * (v_right + v2) * p.rho + signed_square(v2) / (2.0 * p.a_lat_min_br);
  return p.mu + std::max(0.0, left_travel - right_travel);
}

std::vector<double> mu_lateral_velocity(std::span<const double> y, const RssParams& p) {
  const std::size_t n = y.size();
  if (n < 2) throw std::invalid_argument("mu_lateral_velocity: need at least 2 samples");
  const auto window = static_cast<std::size_t>(p.rho_steps());
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t back = i >= window ? i - window : 0;
    if (std::abs(y[i] - y[back]) < 0.5 * p.mu) {
      v[i] = 0.0;
      continue;
    }
    if (i == 0) v[i] = (y[1] - y[0]) / p.dt;
    else if (i + 1 == n) v[i] = (y[i] - y[i - 1]) / p.dt;
    else v[i] = (y[i + 1] - y[i - 1]) / (2.0 * p.dt);
  }
  return v;
}

} // namespace rsstl::rss
