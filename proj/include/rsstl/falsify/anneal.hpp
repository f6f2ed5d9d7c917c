#pragma once

#include "rsstl/falsify/objective.hpp"
#include "rsstl/sim/rng.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace rsstl::falsify {

/// One hit-and-run move in the unit cube. Boundary points are first nudged
/// 1e-9 inward; inactive dimensions stay put. The chord through `u` along a
/// uniform random direction is cut to [-max_step, max_step] and sampled
/// uniformly. An all-inactive mask returns `u` unchanged.
std::vector<double> hit_and_run_step(std::span<const double> u, sim::SplitMix64& rng,
                                     std::span<const bool> active = {},
                                     double max_step = std::numeric_limits<double>::infinity());

struct AnnealOptions {
  std::size_t iters = 300;
  std::size_t warmup = 20;   // uniform samples used to pick T0 and the start
  double final_ratio = 0.01;  // T at the last iteration over T0
  double clamp = 1e6;         // bound on |value| inside the acceptance test
  double min_step = 1e-3;     // adaptive chord length bounds
  double grow = 1.5;
  double shrink = 0.9;
};

struct AnnealPoint {
  std::vector<double> u;
  double value = 0.0;
  bool accepted = false;
};

struct AnnealResult {
  std::vector<AnnealPoint> warmup;
  std::vector<AnnealPoint> history;  // one entry per iteration
  AnnealPoint best;                   // over warm-up and history
  double t0 = 1.0;
};

/// Minimizes f over [0,1]^dim. Candidates come from hit-and-run with a chord
/// length that grows after an improvement and shrinks after a worse draw.
/// Metropolis acceptance with geometric cooling from T0, the spread of the
/// finite warm-up values. Deterministic in `seed`.
AnnealResult anneal(const std::function<double(std::span<const double>)>& f, std::size_t dim,
                    const AnnealOptions& opt, std::uint64_t seed, std::span<const bool> active = {});

struct SearchResult {
  SearchRecord best;
  std::vector<SearchRecord> warmup;
  std::vector<SearchRecord> history;
  double t0 = 1.0;
};

/// Minimizes the robustness of obj.spec over the scenario box. Maneuver
/// timing is held fixed for the whole chain (scenario seed derived from `seed`).
SearchResult simulated_annealing(const ObjectiveSpec& obj, std::size_t iters, std::uint64_t seed,
                                 AnnealOptions opt = {});

} // namespace rsstl::falsify
