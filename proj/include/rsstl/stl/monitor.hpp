#pragma once

#include "rsstl/stl/formula.hpp"
#include "rsstl/stl/trace.hpp"
#include "rsstl/stl/value.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rsstl::stl {

/// Euclidean signed distance from x to {x | a.x + b >= 0}: (a.x + b) / |a|.
/// `x` holds one value per atom term, in term order.
RobustValue signed_distance(std::span<const double> x, const AffineAtom& atom);

/// Robustness of phi at every sample of the trace, computed in one backward
/// dynamic-programming pass per subformula.
std::vector<RobustValue> robustness_signal(const Formula& phi, const Trace& trace);

RobustValue eval_robustness(const Formula& phi, const Trace& trace, std::size_t i);

/// Classical satisfaction (atoms hold when a.x + b >= 0).
bool eval_boolean(const Formula& phi, const Trace& trace, std::size_t i);

struct AtomExtreme {
  RobustValue value;   // smallest margin over the trace
  std::size_t sample;  // first sample where it occurs
};

struct RobustnessReport {
  RobustValue robustness = kBottom;
  /// Empty when the root value comes from a constant (true, an empty
  /// window or a missing next sample) rather than from an atom.
  std::string blamed_atom;
  std::optional<std::size_t> critical_sample;
  std::map<std::string, AtomExtreme> per_atom_extremes;
};

/// Robustness at sample 0 together with the atom whose margin reaches the
/// root through the chosen min/max children. Ties go to the earliest sample,
/// then to the lexicographically smallest atom name.
RobustnessReport blame(const Formula& phi, const Trace& trace);

/// Throws std::out_of_range naming the first channel phi needs that the
/// trace lacks.
void check_channels(const Formula& phi, const Trace& trace);

} // namespace rsstl::stl
