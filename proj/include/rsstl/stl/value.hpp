#pragma once

#include <limits>

namespace rsstl::stl {

// Robustness values live on the extended reals; +inf is top, -inf is bottom.
using RobustValue = double;

inline constexpr RobustValue kTop    = std::numeric_limits<double>::infinity();
inline constexpr RobustValue kBottom = -kTop;

// Zero is kept positive so that values can be compared bit for bit no matter
// which evaluation order produced them.
constexpr RobustValue canonical(RobustValue v) { return v == 0.0 ? 0.0 : v; }

constexpr RobustValue negate(RobustValue v) { return canonical(-v); }
constexpr RobustValue join(RobustValue a, RobustValue b) { return a < b ? b : a; }
constexpr RobustValue meet(RobustValue a, RobustValue b) { return b < a ? b : a; }

} // namespace rsstl::stl
