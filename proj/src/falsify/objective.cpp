#include "rsstl/falsify/objective.hpp"

#include "rsstl/rss/formulas.hpp"
#include "rsstl/rss/lane.hpp"
#include "rsstl/sim/simulator.hpp"
#include "rsstl/stl/monitor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rsstl::falsify {

std::string_view to_string(SpecKind k) { return k == SpecKind::Rss ? "rss" : "cas"; }

SpecKind parse_spec_kind(std::string_view s) {
  if (s == "rss") return SpecKind::Rss;
  if (s == "cas") return SpecKind::Cas;
  throw std::invalid_argument("unknown spec '" + std::string(s) + "' (expected rss or cas)");
}

rss::PredicateOptions ObjectiveSpec::predicate_options() const {
  rss::PredicateOptions o;
  o.vehicle = sim.vehicle;
  o.lane_width = sim.lane_width;
  o.lateral_range = sim.num_lanes * sim.lane_width;
  return o;
}

ScenarioEvaluator::ScenarioEvaluator(ObjectiveSpec obj)
    : obj_(std::move(obj)), rss_(rss::rss_formula(obj_.rss)), cas_(rss::cas_formula(obj_.cas)) {
  obj_.sim.validate();
  if (std::abs(obj_.sim.dt - obj_.rss.dt) > 1e-12 * obj_.rss.dt)
    throw std::invalid_argument("simulator dt and rss dt differ");
}

stl::Trace ScenarioEvaluator::predicate_trace(const sim::ScenarioParams& s) const {
  const auto world = sim::simulate(s, obj_.sim, obj_.box);
  const auto lane = rss::to_lane_coordinates(world, obj_.sim);
  return rss::build_predicate_trace(lane, obj_.rss, obj_.predicate_options());
}

SearchRecord ScenarioEvaluator::evaluate(const sim::ScenarioParams& s, std::size_t index) const {
  try {
    const auto tr = predicate_trace(s);
    const auto report = stl::blame(rss_, tr);
    SearchRecord r;
    r.index = index;
    r.scenario = s;
    r.rob_rss = report.robustness;
    r.rob_cas = stl::eval_robustness(cas_, tr, 0);
    r.blamed_atom = report.blamed_atom;
    return r;
  } catch (const std::exception& e) {
    throw std::runtime_error("scenario seed " + std::to_string(s.seed) + ": " + e.what());
  }
}

SearchRecord evaluate_scenario(const sim::ScenarioParams& s, const ObjectiveSpec& obj) {
  return ScenarioEvaluator(obj).evaluate(s);
}

} // namespace rsstl::falsify
