#include "rsstl/stl/interval.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using rsstl::stl::Interval;

TEST_CASE("interval membership is exact when dt divides the bound") {
  const Interval next_window(0.0, 0.1);
  CHECK(next_window.contains_steps(1, 0.1));
  CHECK_FALSE(next_window.contains_steps(1, 0.2));
  CHECK(next_window.contains_steps(0, 0.2));

  // 0.3 / 0.1 is 2.9999999999999996 in binary floating point
  const Interval upto(0.0, 0.3);
  CHECK(upto.contains_steps(3, 0.1));
  CHECK_FALSE(upto.contains_steps(4, 0.1));

  const Interval hesitation(0.0, 0.5, false, true);
  CHECK(hesitation.contains_steps(49, 0.01));
  CHECK_FALSE(hesitation.contains_steps(50, 0.01));
  const auto w = hesitation.steps(0.01);
  REQUIRE(w);
  CHECK(w->first == 0);
  CHECK(*w->last == 49);
}

TEST_CASE("open and unbounded windows") {
  const auto reaction = Interval::unbounded_from(0.5);
  const auto w = reaction.steps(0.01);
  REQUIRE(w);
  CHECK(w->first == 50);
  CHECK(w->unbounded());

  const Interval open_lo(0.2, 0.4, true, false);
  const auto v = open_lo.steps(0.1);
  REQUIRE(v);
  CHECK(v->first == 3);
  CHECK(*v->last == 4);

  // no sample offset lands in (0.1, 0.2) at dt = 0.25
  CHECK_FALSE(Interval(0.1, 0.2, true, true).steps(0.25).has_value());
}

TEST_CASE("degenerate and invalid intervals") {
  CHECK_NOTHROW(Interval(0.3, 0.3));
  CHECK_THROWS_AS(Interval(0.3, 0.3, true, false), std::invalid_argument);
  CHECK_THROWS_AS(Interval(0.5, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(Interval(-1.0, 2.0), std::invalid_argument);
  CHECK(Interval(0.0, std::numeric_limits<double>::infinity(), false, false).hi_open());
  CHECK(Interval{}.to_string() == "[0,inf)");
  CHECK(Interval(0.5, 2, true, false).to_string() == "(0.5,2]");
}
