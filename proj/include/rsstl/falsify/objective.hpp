#pragma once

#include "rsstl/rss/params.hpp"
#include "rsstl/rss/predicates.hpp"
#include "rsstl/sim/config.hpp"
#include "rsstl/sim/scenario.hpp"
#include "rsstl/stl/formula.hpp"
#include "rsstl/stl/trace.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace rsstl::falsify {

enum class SpecKind { Rss, Cas };

std::string_view to_string(SpecKind k);
/// "rss" or "cas"; throws std::invalid_argument otherwise.
SpecKind parse_spec_kind(std::string_view s);

/// What to minimize and how to produce traces.
struct ObjectiveSpec {
  SpecKind spec = SpecKind::Rss;
  rss::RssParams rss;
  rss::CasParams cas;
  sim::SimConfig sim;
  sim::ScenarioBox box = sim::ScenarioBox::defaults();

  rss::PredicateOptions predicate_options() const;
};

struct SearchRecord {
  std::size_t index = 0;  // scenario index in a batch, iteration in a search
  sim::ScenarioParams scenario;
  double rob_rss = 0.0;
  double rob_cas = 0.0;
  std::string blamed_atom;  // RSS blame
  bool accepted = false;

  double value(SpecKind k) const { return k == SpecKind::Rss ? rob_rss : rob_cas; }
};

/// Simulates, converts to lane coordinates, builds the predicate trace and
/// evaluates both formulas at sample 0. Formulas are built once.
class ScenarioEvaluator {
 public:
  explicit ScenarioEvaluator(ObjectiveSpec obj);

  const ObjectiveSpec& objective() const { return obj_; }
  const stl::Formula& rss_formula() const { return rss_; }
  const stl::Formula& cas_formula() const { return cas_; }

  stl::Trace predicate_trace(const sim::ScenarioParams& s) const;

  /// Errors are rethrown as std::runtime_error prefixed with the scenario seed.
  SearchRecord evaluate(const sim::ScenarioParams& s, std::size_t index = 0) const;

 private:
  ObjectiveSpec obj_;
  stl::Formula rss_;
  stl::Formula cas_;
};

SearchRecord evaluate_scenario(const sim::ScenarioParams& s, const ObjectiveSpec& obj);

} // namespace rsstl::falsify
