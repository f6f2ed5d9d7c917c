#pragma once

// Test-only oracle: a direct transcription of the discrete-time robust
// semantics (sup/inf over explicit index sets), with interval membership
// decided in exact rational arithmetic. It shares nothing with the library
// evaluator except the Formula/Trace data types.

#include "rsstl/stl/formula.hpp"
#include "rsstl/stl/trace.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rsstl::testing {

struct Rational {
  std::int64_t num;
  std::int64_t den;
};

inline Rational to_rational(double x) {
  for (std::int64_t den = 1; den <= 100000; ++den) {
    const double scaled = x * static_cast<double>(den);
    const double r = std::round(scaled);
    if (std::abs(scaled - r) <= 1e-9 * static_cast<double>(den)) return {static_cast<std::int64_t>(r), den};
  }
  throw std::invalid_argument("oracle: bound is not a small rational");
}

class NaiveRobustness {
 public:
  explicit NaiveRobustness(const stl::Trace& trace) : trace_(trace), dt_(to_rational(trace.dt())) {}

  double at(const stl::Formula& f, std::int64_t i) {
    auto key = std::make_pair(f.id(), i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const double v = compute(f, i);
    memo_[key] = v;
    return v;
  }

 private:
  static constexpr double top = std::numeric_limits<double>::infinity();
  static constexpr double bottom = -top;

  static double neg(double v) { return v == 0.0 ? 0.0 : -v; }
  static double sup(double a, double b) { return a < b ? b : a; }
  static double inf(double a, double b) { return b < a ? b : a; }

  std::int64_t n() const { return static_cast<std::int64_t>(trace_.size()); }

  // (j - i) * dt  in  I, decided on integers.
  bool in_window(const stl::Interval& iv, std::int64_t j, std::int64_t i) const {
    const std::int64_t k = j - i;
    if (k < 0) return false;
    const Rational lo = to_rational(iv.lo());
    // compare k*dt.num/dt.den with lo.num/lo.den
    const std::int64_t lhs_lo = k * dt_.num * lo.den;
    const std::int64_t rhs_lo = lo.num * dt_.den;
    if (iv.lo_open() ? !(lhs_lo > rhs_lo) : !(lhs_lo >= rhs_lo)) return false;
    if (std::isinf(iv.hi())) return true;
    const Rational hi = to_rational(iv.hi());
    const std::int64_t lhs_hi = k * dt_.num * hi.den;
    const std::int64_t rhs_hi = hi.num * dt_.den;
    return iv.hi_open() ? lhs_hi < rhs_hi : lhs_hi <= rhs_hi;
  }

  double atom(const stl::AffineAtom& a, std::int64_t i) const {
    double s = 0.0, sq = 0.0;
    for (const auto& t : a.terms) {
      s += t.coef * trace_.channel(t.channel)[static_cast<std::size_t>(i)];
      sq += t.coef * t.coef;
    }
    s += a.constant;
    const double d = s / std::sqrt(sq);
    return d == 0.0 ? 0.0 : d;
  }

  // sup over j in window of inf(rhs(j), inf over i <= l < j of lhs(l))
  template <class Lhs, class Rhs>
  double until(Lhs lhs, Rhs rhs, const stl::Interval& iv, std::int64_t i) {
    double result = bottom;
    for (std::int64_t j = 0; j < n(); ++j) {
      if (!in_window(iv, j, i)) continue;
      double inner = top;
      for (std::int64_t l = i; l < j; ++l) inner = inf(inner, lhs(l));
      result = sup(result, inf(rhs(j), inner));
    }
    return result;
  }

  double compute(const stl::Formula& f, std::int64_t i) {
    using stl::Op;
    switch (f.op()) {
      case Op::True: return top;
      case Op::Atom: return atom(f.atom(), i);
      case Op::Not: return neg(at(f.child(0), i));
      case Op::Or: return sup(at(f.child(0), i), at(f.child(1), i));
      case Op::And: return neg(sup(neg(at(f.child(0), i)), neg(at(f.child(1), i))));
      case Op::Implies: return sup(neg(at(f.child(0), i)), at(f.child(1), i));
      case Op::Next:
        if (i + 1 < n() && in_window(f.interval(), i + 1, i)) return at(f.child(0), i + 1);
        return bottom;
      case Op::Until:
        return until([&](auto l) { return at(f.child(0), l); }, [&](auto j) { return at(f.child(1), j); },
                     f.interval(), i);
      case Op::Release:  // !(!a U !b)
        return neg(until([&](auto l) { return neg(at(f.child(0), l)); },
                         [&](auto j) { return neg(at(f.child(1), j)); }, f.interval(), i));
      case Op::Eventually:  // true U a
        return until([](auto) { return top; }, [&](auto j) { return at(f.child(0), j); }, f.interval(), i);
      case Op::Always:  // !(true U !a)
        return neg(until([](auto) { return top; }, [&](auto j) { return neg(at(f.child(0), j)); }, f.interval(), i));
      case Op::NonStrictRelease: {
        double result = top;
        for (std::int64_t j = 0; j < n(); ++j) {
          if (!in_window(f.interval(), j, i)) continue;
          double inner = bottom;
          for (std::int64_t l = i; l <= j; ++l) inner = sup(inner, at(f.child(0), l));
          result = inf(result, sup(at(f.child(1), j), inner));
        }
        return result;
      }
    }
    throw std::logic_error("oracle: unhandled operator");
  }

  const stl::Trace& trace_;
  Rational dt_;
  std::map<std::pair<const void*, std::int64_t>, double> memo_;
};

} // namespace rsstl::testing
