#pragma once

// Hand-rolled generators for randomized STL properties.

#include "rsstl/stl/formula.hpp"
#include "rsstl/stl/trace.hpp"

#include <array>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace rsstl::testing {

class FormulaGen {
 public:
  explicit FormulaGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  double pick_dt() {
    static constexpr std::array<double, 6> dts{0.1, 0.2, 0.25, 0.5, 1.0, 0.3};
    return dts[static_cast<std::size_t>(uniform_int(0, static_cast<int>(dts.size()) - 1))];
  }

  /// Channels x, y, z with small integer-ish values so ties are common.
  stl::Trace trace(double dt, std::size_t n, const std::vector<std::string>& channels = {"x", "y", "z"}) {
    stl::Trace tr(dt);
    for (const auto& c : channels) {
      std::vector<double> v(n);
      for (auto& s : v) s = coin(0.7) ? uniform_int(-4, 4) : uniform_int(-40, 40) / 8.0;
      tr.add_channel(c, std::move(v));
    }
    return tr;
  }

  stl::Interval interval(double dt) {
    // bounds are multiples of dt or of 0.05, so they are small rationals
    auto bound = [&] {
      return coin() ? uniform_int(0, 6) * dt : uniform_int(0, 30) * 0.05;
    };
    for (;;) {
      const double lo = bound();
      const bool lo_open = coin(0.3);
      if (coin(0.3)) return stl::Interval::unbounded_from(lo, lo_open);
      const double hi = lo + (coin(0.2) ? 0.0 : bound());
      const bool hi_open = coin(0.3);
      if (hi == lo && (lo_open || hi_open)) continue;
      return stl::Interval(lo, hi, lo_open, hi_open);
    }
  }

  stl::Formula atom(const std::vector<std::string>& channels) {
    const auto& c = channels[static_cast<std::size_t>(uniform_int(0, static_cast<int>(channels.size()) - 1))];
    const double threshold = uniform_int(-6, 6) / 2.0;
    if (channels.size() > 1 && coin(0.15)) {
      const auto& d = channels[static_cast<std::size_t>(uniform_int(0, static_cast<int>(channels.size()) - 1))];
      if (d != c) return stl::Atom(stl::AffineAtom{{{c, 1.0}, {d, coin() ? 1.0 : -2.0}}, threshold});
    }
    return stl::Atom(coin() ? stl::AffineAtom::at_least(c, threshold) : stl::AffineAtom::at_most(c, threshold));
  }

  /// Random formula of depth at most `depth` using every operator.
  stl::Formula formula(int depth, double dt, const std::vector<std::string>& channels = {"x", "y", "z"},
                       bool force_nonstrict = false) {
    if (depth <= 1) return coin(0.1) ? stl::True() : atom(channels);
    if (force_nonstrict)
      return stl::NonStrictRelease(formula(depth - 1, dt, channels), formula(depth - 1, dt, channels), interval(dt));
    auto sub = [&] { return formula(uniform_int(1, depth - 1), dt, channels); };
    switch (uniform_int(0, 11)) {
      case 0: return atom(channels);
      case 1: return stl::Not(sub());
      case 2: return stl::Or(sub(), sub());
      case 3: return stl::And(sub(), sub());
      case 4: return stl::Implies(sub(), sub());
      case 5: return stl::Next(sub(), coin(0.4) ? stl::Interval{} : interval(dt));
      case 6: return stl::Until(sub(), sub(), interval(dt));
      case 7: return stl::Release(sub(), sub(), interval(dt));
      case 8: return stl::NonStrictRelease(sub(), sub(), interval(dt));
      case 9: return stl::Eventually(sub(), interval(dt));
      case 10: return stl::Always(sub(), interval(dt));
      default: return stl::True();
    }
  }

 private:
  std::mt19937_64 rng_;
};

} // namespace rsstl::testing
