#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace rsstl::stl {

/// Range of sample offsets k = j - i whose physical time k*dt lies in an
/// interval. `last` is empty for windows without an upper bound.
struct StepWindow {
  std::int64_t first = 0;
  std::optional<std::int64_t> last;

  bool unbounded() const { return !last.has_value(); }
};

/// Non-empty interval of the non-negative reals with optional open ends.
/// An infinite upper bound is always open.
class Interval {
 public:
  /// [0, inf)
  Interval() = default;

  /// Throws std::invalid_argument for negative, inverted or empty intervals.
  Interval(double lo, double hi, bool lo_open = false, bool hi_open = false);

  static Interval unbounded_from(double lo, bool lo_open = false);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }
  bool bounded() const;
  bool is_default() const;

  /// Whether offset k samples (time k*dt) lies in the interval. When a bound
  /// is an integer multiple of dt the comparison is done on integers, so
  /// `[0,0.1]` at dt = 0.1 contains k = 1 exactly.
  bool contains_steps(std::int64_t k, double dt) const;

  /// The contiguous set of offsets k >= 0 satisfying contains_steps, or
  /// nullopt if there is none.
  std::optional<StepWindow> steps(double dt) const;

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  bool above_lower(std::int64_t k, double dt) const;
  bool below_upper(std::int64_t k, double dt) const;

  double lo_ = 0.0;
  double hi_ = std::numeric_limits<double>::infinity();
  bool lo_open_ = false;
  bool hi_open_ = true;
};

} // namespace rsstl::stl
