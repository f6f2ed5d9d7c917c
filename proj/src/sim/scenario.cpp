#include "rsstl/sim/scenario.hpp"

#include "rsstl/util/format.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rsstl::sim {

std::array<double, kScenarioDims> ScenarioParams::to_vector() const {
  return {ego.x, ego.y, ego.theta, ego.v,
          a1.x, a1.y, a1.v, a1.y_target, a1.v_target,
          a2.x, a2.y, a2.v, a2.y_target, a2.v_target};
}

ScenarioParams ScenarioParams::from_vector(const std::array<double, kScenarioDims>& v, std::uint64_t seed) {
  ScenarioParams s;
  s.ego = {v[0], v[1], v[2], v[3]};
  s.a1 = {v[4], v[5], v[6], v[7], v[8]};
  s.a2 = {v[9], v[10], v[11], v[12], v[13]};
  s.seed = seed;
  return s;
}

const std::array<std::string_view, kScenarioDims>& scenario_field_names() {
  static constexpr std::array<std::string_view, kScenarioDims> names{
      "x_init_ego", "y_init_ego", "theta_init_ego", "v_init_ego",
      "x_init_a1",  "y_init_a1",  "v_init_a1",      "y_a1",       "v_a1",
      "x_init_a2",  "y_init_a2",  "v_init_a2",      "y_a2",       "v_a2"};
  return names;
}

ScenarioBox ScenarioBox::defaults() {
  constexpr double pi = std::numbers::pi;
  return ScenarioBox{{{
      {0, 5}, {-1.5, 4.5}, {-pi / 8, pi / 8}, {10, 25},
      {20, 40}, {-3.5, -1.5}, {5, 15}, {-5, 0}, {10, 30},
      {10, 25}, {1, 4}, {0, 30}, {0, 5}, {4, 20},
  }}};
}

void ScenarioBox::check(const ScenarioParams& s) const {
  const auto v = s.to_vector();
  const auto& names = scenario_field_names();
  for (std::size_t k = 0; k < kScenarioDims; ++k) {
    if (!ranges[k].contains(v[k])) {
      throw std::out_of_range(std::string(names[k]) + " = " + util::format_double(v[k]) + " outside [" +
                              util::format_double(ranges[k].lo) + ", " + util::format_double(ranges[k].hi) + "]");
    }
  }
}

bool ScenarioBox::contains(const ScenarioParams& s) const {
  const auto v = s.to_vector();
  for (std::size_t k = 0; k < kScenarioDims; ++k) {
    if (!ranges[k].contains(v[k])) return false;
  }
  return true;
}

std::array<double, kScenarioDims> ScenarioBox::normalize(const ScenarioParams& s) const {
  const auto v = s.to_vector();
  std::array<double, kScenarioDims> u{};
  for (std::size_t k = 0; k < kScenarioDims; ++k) {
    u[k] = ranges[k].width() > 0 ? (v[k] - ranges[k].lo) / ranges[k].width() : 0.0;
  }
  return u;
}

ScenarioParams ScenarioBox::denormalize(const std::array<double, kScenarioDims>& u, std::uint64_t seed) const {
  std::array<double, kScenarioDims> v{};
  for (std::size_t k = 0; k < kScenarioDims; ++k) {
    // clamp: lo + w*1 can round above hi
    v[k] = std::min(ranges[k].hi, std::max(ranges[k].lo, ranges[k].lo + ranges[k].width() * u[k]));
  }
  return ScenarioParams::from_vector(v, seed);
}

ScenarioParams sample_scenario(SplitMix64& rng, const ScenarioBox& box) {
  std::array<double, kScenarioDims> v{};
  for (std::size_t k = 0; k < kScenarioDims; ++k) {
    const auto& r = box.ranges[k];
    if (!(r.lo <= r.hi))
      throw std::invalid_argument("empty range for " + std::string(scenario_field_names()[k]));
    v[k] = r.lo + r.width() * rng.uniform01();
  }
  return ScenarioParams::from_vector(v, rng.next());
}

} // namespace rsstl::sim
