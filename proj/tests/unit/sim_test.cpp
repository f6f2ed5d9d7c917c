#include "rsstl/sim/simulator.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

using namespace rsstl::sim;

namespace {

ScenarioParams calm_scenario() {
  ScenarioParams s;
  s.ego = {2.0, 0.0, 0.0, 20.0};
  s.a1 = {30.0, -2.0, 10.0, -2.0, 10.0};
  s.a2 = {15.0, 2.0, 10.0, 2.0, 10.0};
  s.seed = 7;
  return s;
}

// Box with room to park agents far away.
ScenarioBox wide_box() {
  ScenarioBox b = ScenarioBox::defaults();
  for (auto& r : b.ranges) r = {-1e6, 1e6};
  return b;
}

} // namespace

TEST_CASE("config validation and sample count") {
  SimConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.samples() == 1001);
  CHECK(cfg.lane_centers() == std::vector<double>{-3.5, 0.0, 3.5});
  CHECK(cfg.road_half_width() == doctest::Approx(5.25));
  CHECK(cfg.nearest_lane_center(2.0) == 3.5);
  CHECK(cfg.nearest_lane_center(-1.0) == 0.0);
  SimConfig bad = cfg;
  bad.dt = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.duration = 10.005;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("ego alone cruises in lane at target speed") {
  ScenarioParams s = calm_scenario();
  s.ego = {3.0, 0.0, 0.0, 25.0};
  s.a1.x = 5000.0;
  s.a2.x = 6000.0;
  const auto tr = simulate(s, SimConfig{}, wide_box());
  const auto& last = tr.ego().states.back();
  CHECK(std::abs(last.x - (3.0 + 250.0)) <= 1.0);
  CHECK(std::abs(last.y) < 1e-9);
  CHECK(last.v == doctest::Approx(25.0));
}

TEST_CASE("agent without maneuver moves at constant velocity") {
  const auto tr = simulate(calm_scenario(), SimConfig{});
  const auto& a1 = tr.vehicles[1];
  for (std::size_t i = 0; i < tr.size(); ++i) {
    CHECK(a1.states[i].y == -2.0);
    CHECK(a1.states[i].v == 10.0);
    CHECK(a1.controls[i].accel == 0.0);
    CHECK(a1.controls[i].steer == 0.0);
  }
  CHECK(a1.states.back().x == doctest::Approx(30.0 + 100.0));
}

TEST_CASE("agent lateral profile is monotone and reaches the target") {
  ScenarioParams s = calm_scenario();
  s.a2 = {15.0, 2.0, 10.0, 5.0, 10.0};
  SimConfig cfg;
  const auto tr = simulate(s, cfg);
  const auto m = make_maneuver(s, 2, cfg);
  CHECK(m.t_start >= 1.0);
  CHECK(m.t_start <= 5.0);
  const auto& a2 = tr.vehicles[2];
  for (std::size_t i = 1; i < tr.size(); ++i) CHECK(a2.states[i].y >= a2.states[i - 1].y - 1e-12);
  CHECK(a2.states.back().y == doctest::Approx(5.0).epsilon(0.01));
  // reference itself is a smoothstep from 2 to 5
  CHECK(m.y_ref(m.t_start) == 2.0);
  CHECK(m.y_ref(m.t_start + 2.0) == 5.0);
  CHECK(m.y_ref(m.t_start + 1.0) == doctest::Approx(3.5));
}

TEST_CASE("agent speed change uses the maneuver-window acceleration") {
  ScenarioParams s = calm_scenario();
  s.a1 = {30.0, -2.0, 10.0, -2.0, 30.0};
  SimConfig cfg;
  const auto tr = simulate(s, cfg);
  const auto m = make_maneuver(s, 1, cfg);
  CHECK(m.accel == doctest::Approx(10.0));
  const auto mid = static_cast<std::size_t>((m.t_start + 1.0) / cfg.dt);
  CHECK(tr.vehicles[1].controls[mid].accel == doctest::Approx(10.0));
  CHECK(tr.vehicles[1].states.back().v == doctest::Approx(30.0));
}

TEST_CASE("controller examples") {
  SimConfig cfg;
  const std::vector<VehicleState> none;
  SUBCASE("free road accelerates") {
    const auto c = ego_controller_step({0, 0, 0, 20}, 0.0, none, cfg);
    CHECK(c.accel > 0.0);
  }
  SUBCASE("stopped leader close ahead saturates braking") {
    const std::vector<VehicleState> lead{{5, 0, 0, 0}};
    const auto c = ego_controller_step({0, 0, 0, 20}, 0.0, lead, cfg);
    CHECK(c.accel == -cfg.ego.max_decel);
  }
  SUBCASE("leader in another lane is ignored") {
    const std::vector<VehicleState> side{{5, 3.5, 0, 0}};
    CHECK(ego_controller_step({0, 0, 0, 20}, 0.0, side, cfg).accel > 0.0);
  }
  SUBCASE("steering corrects toward the centerline") {
    CHECK(ego_controller_step({0, 1, 0, 20}, 0.0, none, cfg).steer < 0.0);
    CHECK(ego_controller_step({0, -1, 0, 20}, 0.0, none, cfg).steer > 0.0);
  }
}

TEST_CASE("out-of-range scenario is rejected with the field name") {
  ScenarioParams s = calm_scenario();
  s.a2.v_target = 25.0;
  try {
    simulate(s, SimConfig{});
    FAIL("expected rejection");
  } catch (const std::out_of_range& e) {
    CHECK(std::string(e.what()).find("v_a2") != std::string::npos);
  }
}

TEST_CASE("simulation is deterministic") {
  SplitMix64 rng(99);
  for (int k = 0; k < 5; ++k) {
    const auto s = sample_scenario(rng, ScenarioBox::defaults());
    CHECK(simulate(s, SimConfig{}).to_csv() == simulate(s, SimConfig{}).to_csv());
  }
}

TEST_CASE("random scenarios stay physically sane and aligned") {
  SplitMix64 rng(2024);
  SimConfig cfg;
  for (int k = 0; k < 200; ++k) {
    const auto s = sample_scenario(rng, ScenarioBox::defaults());
    const auto tr = simulate(s, cfg);
    for (const auto& v : tr.vehicles) {
      REQUIRE(v.states.size() == 1001);
      REQUIRE(v.controls.size() == 1001);
      for (std::size_t i = 0; i + 1 < v.states.size(); ++i) {
        const double a = (v.states[i + 1].v - v.states[i].v) / cfg.dt;
        REQUIRE(std::abs(a) <= 10.0 + 1e-6);
        REQUIRE(v.states[i].v >= 0.0);
        REQUIRE(std::isfinite(v.states[i].x));
        REQUIRE(std::isfinite(v.states[i].y));
      }
    }
  }
}

TEST_CASE("free-road speed converges by eight seconds") {
  SplitMix64 rng(5);
  SimConfig cfg;
  const auto box = ScenarioBox::defaults();
  for (int k = 0; k < 100; ++k) {
    auto s = sample_scenario(rng, box);
    if (k == 0) s.ego.v = 10.0;
    if (k == 1) s.ego.v = 25.0;
    s.a1.x += 2000.0;
    s.a2.x += 3000.0;
    const auto tr = simulate(s, cfg, wide_box());
    const auto i8 = static_cast<std::size_t>(std::llround(8.0 / cfg.dt));
    for (std::size_t i = i8; i < tr.size(); ++i) REQUIRE(std::abs(tr.ego().states[i].v - 25.0) < 0.1);
  }
}

TEST_CASE("sampler stays in the box and is uniform") {
  const auto box = ScenarioBox::defaults();
  SplitMix64 rng(11);
  constexpr int kDraws = 10000;
  constexpr int kBins = 20;
  std::array<int, kBins> hist{};
  for (int k = 0; k < kDraws; ++k) {
    const auto s = sample_scenario(rng, box);
    REQUIRE(box.contains(s));
    const int b = std::min(kBins - 1, static_cast<int>((s.ego.v - 10.0) / 15.0 * kBins));
    ++hist[static_cast<std::size_t>(b)];
  }
  double chi2 = 0.0;
  const double expected = static_cast<double>(kDraws) / kBins;
  for (int h : hist) chi2 += (h - expected) * (h - expected) / expected;
  CHECK(chi2 < 36.191);  // chi-square, 19 dof, alpha 0.01

  SplitMix64 r1(1), r2(2);
  CHECK(sample_scenario(r1, box).to_vector() != sample_scenario(r2, box).to_vector());
  ScenarioBox empty = box;
  empty.ranges[3] = {5.0, 4.0};
  CHECK_THROWS_AS(sample_scenario(r1, empty), std::invalid_argument);
}

TEST_CASE("box normalization round trip") {
  const auto box = ScenarioBox::defaults();
  SplitMix64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const auto s = sample_scenario(rng, box);
    const auto back = box.denormalize(box.normalize(s), s.seed);
    const auto a = s.to_vector(), b = back.to_vector();
    for (std::size_t d = 0; d < kScenarioDims; ++d) CHECK(b[d] == doctest::Approx(a[d]).epsilon(1e-12));
  }
  CHECK(scenario_field_names()[0] == "x_init_ego");
  CHECK(scenario_field_names()[13] == "v_a2");
}
