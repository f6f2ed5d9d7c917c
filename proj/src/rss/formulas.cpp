#include "rsstl/rss/formulas.hpp"

#include "rsstl/rss/predicates.hpp"

#include <string>

namespace rsstl::rss {

using stl::AffineAtom;
using stl::And;
using stl::Formula;
using stl::Implies;
using stl::Interval;
using stl::Next;
using stl::NonStrictRelease;
using stl::Not;
using stl::Or;

namespace {

Formula holds(std::string_view channel) { return stl::Atom(AffineAtom::at_least(std::string(channel), 0.0)); }

} // namespace

RssFormulas rss_formulas(const RssParams& p) {
  p.validate();
  const Formula s_lat = holds(channel::S_lat);
  const Formula s_lon = holds(channel::S_lon);
  const Formula v_stop = holds(channel::V_lat_stop);
  const Formula safe = Or(s_lat, s_lon);
  const Interval hesitation(0.0, p.rho, false, true);
  const Interval reaction = Interval::unbounded_from(p.rho);

  const Formula P_lon = And(NonStrictRelease(safe, holds(channel::A_lon_maxAcc), hesitation),
                            NonStrictRelease(safe, holds(channel::A_lon_minBr), reaction));
  const Formula P_lat_0 = NonStrictRelease(safe, holds(channel::A_lat_maxAcc), hesitation);
  const Formula P_lat_1 = NonStrictRelease(Or(safe, v_stop), holds(channel::A_lat_minBr), reaction);
  const Formula P_lat_2 =
      NonStrictRelease(safe, Implies(v_stop, NonStrictRelease(safe, holds(channel::V_lat_neg))), reaction);
  const Formula P_lat = And(And(P_lat_0, P_lat_1), P_lat_2);

  const Formula becomes_unsafe = Next(And(Not(s_lat), Not(s_lon)));
  const Formula phi_lon = stl::Always(Implies(And(And(Not(s_lat), s_lon), becomes_unsafe), Next(P_lon)));
  const Formula phi_lat = stl::Always(Implies(And(And(s_lat, Not(s_lon)), becomes_unsafe), Next(P_lat)));
  const Formula phi_lat_lon = stl::Always(Implies(And(And(s_lat, s_lon), becomes_unsafe), Next(Or(P_lat, P_lon))));
  const Formula phi_not = Implies(And(Not(s_lat), Not(s_lon)), Next(Or(P_lat, P_lon)));
  const Formula phi = And(And(And(phi_lon, phi_lat), phi_lat_lon), phi_not);
  return RssFormulas{P_lon, P_lat_0, P_lat_1, P_lat_2, P_lat, phi_lon, phi_lat, phi_lat_lon, phi_not, phi};
}

Formula rss_formula(const RssParams& p) { return rss_formulas(p).phi; }

Formula cas_formula(const CasParams& c) {
  c.validate();
  auto close = [&](std::string_view dx, std::string_view dy) {
    return And(Not(stl::Atom(AffineAtom::at_least(std::string(dx), c.delta_x))),
               Not(stl::Atom(AffineAtom::at_least(std::string(dy), c.delta_y))));
  };
  const Formula a1 = close(channel::dx_a1, channel::dy_a1);
  const Formula a2 = close(channel::dx_a2, channel::dy_a2);
  return stl::Always(Not(c.per_agent ? Or(a1, a2) : And(a1, a2)));
}

Formula cas_formula(double delta_x, double delta_y) { return cas_formula(CasParams{delta_x, delta_y, false}); }

} // namespace rsstl::rss
