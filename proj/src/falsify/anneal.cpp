#include "rsstl/falsify/anneal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace rsstl::falsify {

namespace {

bool is_active(std::span<const bool> active, std::size_t d) { return active.empty() || active[d]; }

} // namespace

std::vector<double> hit_and_run_step(std::span<const double> u, sim::SplitMix64& rng, std::span<const bool> active,
                                     double max_step) {
  if (!active.empty() && active.size() != u.size())
    throw std::invalid_argument("hit_and_run_step: mask size differs from point size");
  constexpr double nudge = 1e-9;
  std::vector<double> x(u.begin(), u.end());
  std::vector<double> dir(u.size(), 0.0);
  double norm2 = 0.0;
  for (std::size_t d = 0; d < u.size(); ++d) {
    if (!is_active(active, d)) continue;
    x[d] = std::clamp(x[d], nudge, 1.0 - nudge);
    dir[d] = rng.normal();
    norm2 += dir[d] * dir[d];
  }
  if (norm2 == 0.0) return {u.begin(), u.end()};
  const double norm = std::sqrt(norm2);

  double lo = -max_step, hi = max_step;
  for (std::size_t d = 0; d < u.size(); ++d) {
    dir[d] /= norm;
    if (dir[d] > 0.0) {
      lo = std::max(lo, -x[d] / dir[d]);
      hi = std::min(hi, (1.0 - x[d]) / dir[d]);
    } else if (dir[d] < 0.0) {
      lo = std::max(lo, (1.0 - x[d]) / dir[d]);
      hi = std::min(hi, -x[d] / dir[d]);
    }
  }
  const double t = lo + (hi - lo) * rng.uniform01();
  for (std::size_t d = 0; d < u.size(); ++d) {
    if (dir[d] != 0.0) x[d] = std::clamp(x[d] + t * dir[d], 0.0, 1.0);
  }
  return x;
}

AnnealResult anneal(const std::function<double(std::span<const double>)>& f, std::size_t dim,
                    const AnnealOptions& opt, std::uint64_t seed, std::span<const bool> active) {
  if (opt.iters == 0) throw std::invalid_argument("anneal: iters must be at least 1");
  if (opt.warmup == 0) throw std::invalid_argument("anneal: warmup must be at least 1");
  if (!active.empty() && active.size() != dim) throw std::invalid_argument("anneal: mask size differs from dim");
  sim::SplitMix64 rng(seed);
  auto clamped = [&](double v) { return std::clamp(v, -opt.clamp, opt.clamp); };

  AnnealResult res;
  std::size_t n_active = 0;
  for (std::size_t d = 0; d < dim; ++d) n_active += is_active(active, d) ? 1 : 0;

  for (std::size_t k = 0; k < opt.warmup; ++k) {
    AnnealPoint p;
    p.u.assign(dim, 0.0);
    for (std::size_t d = 0; d < dim; ++d) {
      if (is_active(active, d)) p.u[d] = rng.uniform01();
    }
    p.value = f(p.u);
    p.accepted = true;
    res.warmup.push_back(std::move(p));
  }

  // spread of the finite warm-up values
  double sum = 0.0, sum2 = 0.0;
  std::size_t finite = 0;
  for (const auto& p : res.warmup) {
    if (!std::isfinite(p.value)) continue;
    sum += p.value;
    ++finite;
  }
  if (finite >= 2) {
    const double mean = sum / static_cast<double>(finite);
    for (const auto& p : res.warmup) {
      if (std::isfinite(p.value)) sum2 += (p.value - mean) * (p.value - mean);
    }
    const double sd = std::sqrt(sum2 / static_cast<double>(finite - 1));
    if (std::isfinite(sd) && sd > 0.0) res.t0 = sd;
  }

  res.best = res.warmup.front();
  for (const auto& p : res.warmup) {
    if (p.value < res.best.value) res.best = p;
  }
  AnnealPoint current = res.best;

  const double alpha = std::pow(opt.final_ratio, 1.0 / static_cast<double>(opt.iters));
  const double max_step = std::sqrt(static_cast<double>(std::max<std::size_t>(n_active, 1)));
  double step = max_step;
  double temperature = res.t0;
  for (std::size_t k = 0; k < opt.iters; ++k) {
    temperature = res.t0 * std::pow(alpha, static_cast<double>(k + 1));
    AnnealPoint cand;
    cand.u = hit_and_run_step(current.u, rng, active, step >= max_step ? std::numeric_limits<double>::infinity() : step);
    cand.value = f(cand.u);
    const double u01 = rng.uniform01();
    if (cand.value < current.value) {
      step = std::min(max_step, step * opt.grow);
      cand.accepted = true;
    } else {
      if (cand.value > current.value) step = std::max(opt.min_step, step * opt.shrink);
      cand.accepted = u01 < std::exp(-(clamped(cand.value) - clamped(current.value)) / temperature);
    }
    if (cand.value < res.best.value) res.best = cand;
    if (cand.accepted) current = cand;
    res.history.push_back(std::move(cand));
  }
  return res;
}

SearchResult simulated_annealing(const ObjectiveSpec& obj, std::size_t iters, std::uint64_t seed, AnnealOptions opt) {
  opt.iters = iters;
  const ScenarioEvaluator eval(obj);
  const std::uint64_t scenario_seed = sim::SplitMix64::derive(seed, 0);
  std::vector<bool> active_v;
  for (const auto& r : obj.box.ranges) active_v.push_back(r.width() > 0.0);
  const std::unique_ptr<bool[]> active(new bool[active_v.size()]);
  std::copy(active_v.begin(), active_v.end(), active.get());

  std::vector<SearchRecord> evaluated;
  auto f = [&](std::span<const double> u) {
    std::array<double, sim::kScenarioDims> a{};
    std::copy(u.begin(), u.end(), a.begin());
    evaluated.push_back(eval.evaluate(obj.box.denormalize(a, scenario_seed)));
    return evaluated.back().value(obj.spec);
  };
  const auto res = anneal(f, sim::kScenarioDims, opt, sim::SplitMix64::derive(seed, 1),
                          std::span<const bool>(active.get(), active_v.size()));

  SearchResult out;
  out.t0 = res.t0;
  for (std::size_t k = 0; k < evaluated.size(); ++k) {
    const bool warm = k < opt.warmup;
    auto rec = evaluated[k];
    rec.index = warm ? k : k - opt.warmup;
    rec.accepted = warm ? true : res.history[k - opt.warmup].accepted;
    (warm ? out.warmup : out.history).push_back(std::move(rec));
  }
  out.best = out.warmup.front();
  for (const auto* list : {&out.warmup, &out.history}) {
    for (const auto& r : *list) {
      if (r.value(obj.spec) < out.best.value(obj.spec)) out.best = r;
    }
  }
  return out;
}

} // namespace rsstl::falsify
