#include "rsstl/sim/trajectory.hpp"

#include "rsstl/util/format.hpp"

#include <ostream>
#include <sstream>

namespace rsstl::sim {

const std::array<std::string_view, kVehicles>& WorldTrajectory::names() {
  static constexpr std::array<std::string_view, kVehicles> n{"ego", "a1", "a2"};
  return n;
}

void WorldTrajectory::write_csv(std::ostream& out) const {
  out << 't';
  for (auto name : names()) {
    for (const char* f : {"_x", "_y", "_theta", "_v"}) out << ',' << name << f;
  }
  out << '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    out << util::format_double(static_cast<double>(i) * dt);
    for (const auto& v : vehicles) {
      const auto& s = v.states[i];
      for (double x : {s.x, s.y, s.theta, s.v}) out << ',' << util::format_double(x);
    }
    out << '\n';
  }
}

std::string WorldTrajectory::to_csv() const {
  std::ostringstream os;
  write_csv(os);
  return os.str();
}

} // namespace rsstl::sim
