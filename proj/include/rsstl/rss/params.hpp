#pragma once

#include <json.hpp>

namespace rsstl::rss {

/// RSS constants; defaults are the case-study values.
struct RssParams {
  double rho = 0.5;   // response time (s)
  double mu = 0.4;    // lateral fluctuation margin (m)
  double dt = 0.01;   // sampling time (s)
  double a_lon_min_br = 4.0;
  double a_lon_max_acc = 4.5;
  double a_lon_max_br = 2.5;
  double a_lat_min_br = 3.0;
  double a_lat_max_acc = 3.0;

  /// Throws std::invalid_argument: nonpositive field, or rho not a multiple of dt.
  void validate() const;

  /// Samples in the response time, rho / dt.
  long rho_steps() const;

  friend bool operator==(const RssParams&, const RssParams&) = default;
};

/// Box thresholds for the collision check.
struct CasParams {
  double delta_x = 5.2;
  double delta_y = 2.0;
  bool per_agent = false;  // disjunction over agents instead of the conjunction

  void validate() const;
};

/// Keys rho, mu, dt, a_lon_min_br, ...; missing keys keep their default,
/// unknown keys are an error.
RssParams rss_params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RssParams& p);

/// Keys delta_x, delta_y, per_agent.
CasParams cas_params_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CasParams& p);

} // namespace rsstl::rss
