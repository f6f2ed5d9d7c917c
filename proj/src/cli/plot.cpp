#include "rsstl/cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace rsstl::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

constexpr const char* kColors[] = {"#d62728", "#1f77b4", "#2ca02c"};

} // namespace

std::string trajectory_svg(const sim::WorldTrajectory& world, const sim::SimConfig& cfg) {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  for (const auto& v : world.vehicles) {
    for (const auto& s : v.states) {
      x_min = std::min(x_min, s.x);
      x_max = std::max(x_max, s.x);
    }
  }
  x_min -= cfg.vehicle.length;
  x_max += cfg.vehicle.length;
  const double half = cfg.road_half_width() + 1.0;
  const double width_px = 1200, margin = 40, sy = 24;
  const double sx = (width_px - 2 * margin) / std::max(1.0, x_max - x_min);
  const double height_px = 2 * half * sy + 2 * margin;
  auto px = [&](double x) { return num(margin + (x - x_min) * sx); };
  auto py = [&](double y) { return num(margin + (half - y) * sy); };  // left of the road is up

  std::string o;
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width_px) + "\" height=\"" + num(height_px) + "\">\n";
  o += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double edge = cfg.road_half_width();
  o += "<rect x=\"" + px(x_min) + "\" y=\"" + py(edge) + "\" width=\"" + num((x_max - x_min) * sx) + "\" height=\"" +
       num(2 * edge * sy) + "\" fill=\"#eeeeee\"/>\n";
  for (int k = 0; k <= cfg.num_lanes; ++k) {
    const double y = -edge + k * cfg.lane_width;
    const bool border = k == 0 || k == cfg.num_lanes;
    o += "<line x1=\"" + px(x_min) + "\" y1=\"" + py(y) + "\" x2=\"" + px(x_max) + "\" y2=\"" + py(y) +
         "\" stroke=\"#555555\" stroke-width=\"" + (border ? "2" : "1") + "\"" +
         (border ? "" : " stroke-dasharray=\"12,8\"") + "/>\n";
  }

  const auto per_second = static_cast<std::size_t>(std::max(1.0, std::round(1.0 / world.dt)));
  const auto& names = sim::WorldTrajectory::names();
  for (std::size_t v = 0; v < sim::kVehicles; ++v) {
    const auto& st = world.vehicles[v].states;
    o += "<polyline fill=\"none\" stroke=\"" + std::string(kColors[v]) + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < st.size(); i += 5) o += px(st[i].x) + "," + py(st[i].y) + " ";
    if (!st.empty()) o += px(st.back().x) + "," + py(st.back().y);
    o += "\"/>\n";
    for (std::size_t i = 0; i < st.size(); i += per_second) {
      const double w = cfg.vehicle.length * sx, h = cfg.vehicle.width * sy;
      const bool first = i == 0;
      o += "<rect x=\"" + num(margin + (st[i].x - cfg.vehicle.length / 2 - x_min) * sx) + "\" y=\"" +
           num(margin + (half - st[i].y - cfg.vehicle.width / 2) * sy) + "\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" fill=\"" + (first ? "none" : kColors[v]) + "\" fill-opacity=\"0.35\" stroke=\"" + kColors[v] +
           "\"/>\n";
    }
    o += "<text x=\"" + num(margin + 10 + 70 * static_cast<double>(v)) + "\" y=\"20\" fill=\"" + kColors[v] +
         "\" font-family=\"sans-serif\" font-size=\"14\">" + std::string(names[v]) + "</text>\n";
  }
  o += "<text x=\"" + num(width_px - margin - 220) + "\" y=\"20\" font-family=\"sans-serif\" font-size=\"12\">x " +
       num(x_min) + " .. " + num(x_max) + " m, footprints every 1 s</text>\n";
  o += "</svg>\n";
  return o;
}

} // namespace rsstl::cli
