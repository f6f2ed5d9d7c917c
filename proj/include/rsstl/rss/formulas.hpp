#pragma once

#include "rsstl/rss/params.hpp"
#include "rsstl/stl/formula.hpp"

namespace rsstl::rss {

/// The responsibility formula and its named parts.
struct RssFormulas {
  stl::Formula P_lon;
  stl::Formula P_lat_0;  // hesitation part of P_lat
  stl::Formula P_lat_1;  // lateral braking
  stl::Formula P_lat_2;  // lateral velocity
  stl::Formula P_lat;
  stl::Formula phi_lon;
  stl::Formula phi_lat;
  stl::Formula phi_lat_lon;
  stl::Formula phi_not_lat_not_lon;
  stl::Formula phi;  // conjunction of the four
};

/// Atoms compare the predicate channels against 0 (margin >= 0).
RssFormulas rss_formulas(const RssParams& p);
stl::Formula rss_formula(const RssParams& p);

/// G !(dx_a1 < dx & dy_a1 < dy & dx_a2 < dx & dy_a2 < dy). With per_agent the
/// inner conjunction is split into one box per agent joined by "or".
stl::Formula cas_formula(const CasParams& c);
stl::Formula cas_formula(double delta_x, double delta_y);

} // namespace rsstl::rss
