#include "rsstl/stl/interval.hpp"

#include "rsstl/util/format.hpp"

#include <cmath>
#include <stdexcept>

namespace rsstl::stl {

namespace {

// bound / dt as an integer when dt divides the bound (up to rounding noise).
std::optional<std::int64_t> multiple_of(double bound, double dt) {
  const double q = bound / dt;
  if (!std::isfinite(q) || std::abs(q) > 1e15) return std::nullopt;
  const double r = std::round(q);
  if (std::abs(q - r) <= 1e-9 * std::max(1.0, std::abs(q))) return static_cast<std::int64_t>(r);
  return std::nullopt;
}

} // namespace

Interval::Interval(double lo, double hi, bool lo_open, bool hi_open)
    : lo_(lo), hi_(hi), lo_open_(lo_open), hi_open_(hi_open || std::isinf(hi)) {
  if (std::isnan(lo) || std::isnan(hi)) throw std::invalid_argument("interval bound is NaN");
  if (lo < 0.0 || std::isinf(lo)) throw std::invalid_argument("interval lower bound must be finite and >= 0");
  if (hi < lo) throw std::invalid_argument("inverted interval " + to_string());
  if (hi == lo && (lo_open_ || hi_open_)) throw std::invalid_argument("empty interval " + to_string());
}

Interval Interval::unbounded_from(double lo, bool lo_open) {
  return Interval(lo, std::numeric_limits<double>::infinity(), lo_open, true);
}

bool Interval::bounded() const { return std::isfinite(hi_); }

bool Interval::is_default() const { return *this == Interval{}; }

bool Interval::above_lower(std::int64_t k, double dt) const {
  if (auto m = multiple_of(lo_, dt)) return lo_open_ ? k > *m : k >= *m;
  const double t = static_cast<double>(k) * dt;
  return lo_open_ ? t > lo_ : t >= lo_;
}

bool Interval::below_upper(std::int64_t k, double dt) const {
  if (!bounded()) return true;
  if (auto m = multiple_of(hi_, dt)) return hi_open_ ? k < *m : k <= *m;
  const double t = static_cast<double>(k) * dt;
  return hi_open_ ? t < hi_ : t <= hi_;
}

bool Interval::contains_steps(std::int64_t k, double dt) const {
  return k >= 0 && above_lower(k, dt) && below_upper(k, dt);
}

std::optional<StepWindow> Interval::steps(double dt) const {
  if (!(dt > 0.0)) throw std::invalid_argument("sampling period must be positive");
  StepWindow w;
  w.first = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(lo_ / dt)) - 1);
  while (!above_lower(w.first, dt)) ++w.first;
  if (!bounded()) return w;
  std::int64_t last = static_cast<std::int64_t>(std::ceil(hi_ / dt)) + 1;
  while (last >= w.first && !below_upper(last, dt)) --last;
  if (last < w.first) return std::nullopt;
  w.last = last;
  return w;
}

std::string Interval::to_string() const {
  std::string s;
  s += lo_open_ ? '(' : '[';
  s += util::format_double(lo_);
  s += ',';
  s += bounded() ? util::format_double(hi_) : "inf";
  s += hi_open_ ? ')' : ']';
  return s;
}

} // namespace rsstl::stl
