#pragma once

#include "rsstl/falsify/objective.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace rsstl::falsify {

/// Scenario `index` of a batch drawn with master seed `seed`.
sim::ScenarioParams batch_scenario(std::uint64_t seed, std::size_t index, const sim::ScenarioBox& box);

/// Runs body(i) for i in [0, n) on up to `jobs` threads. The first exception
/// thrown by any worker is rethrown after all workers stop.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

/// n uniform scenarios, evaluated in parallel; the result does not depend on
/// `jobs`. Throws std::invalid_argument for n == 0.
std::vector<SearchRecord> uniform_batch(std::size_t n, std::uint64_t seed, const ObjectiveSpec& obj, unsigned jobs = 1);

} // namespace rsstl::falsify
