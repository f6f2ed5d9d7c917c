#include "rsstl/rss/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rsstl::rss {

namespace {

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0)) throw std::invalid_argument(std::string("rss: ") + name + " must be positive");
}

template <class T>
void read_key(const nlohmann::json& j, const char* key, T& out) {
  if (auto it = j.find(key); it != j.end()) out = it->template get<T>();
}

void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> known, const char* what) {
  for (const auto& [k, _] : j.items()) {
    bool ok = false;
    for (const char* n : known) ok = ok || k == n;
    if (!ok) throw std::invalid_argument(std::string(what) + ": unknown key '" + k + "'");
  }
}

} // namespace

void RssParams::validate() const {
  require_positive(rho, "rho");
  require_positive(mu, "mu");
  require_positive(dt, "dt");
  require_positive(a_lon_min_br, "a_lon_min_br");
  require_positive(a_lon_max_acc, "a_lon_max_acc");
  require_positive(a_lon_max_br, "a_lon_max_br");
  require_positive(a_lat_min_br, "a_lat_min_br");
  require_positive(a_lat_max_acc, "a_lat_max_acc");
  const double k = rho / dt;
  if (std::abs(k - std::round(k)) > 1e-9 * std::max(1.0, k))
    throw std::invalid_argument("rss: rho must be an integer multiple of dt");
}

long RssParams::rho_steps() const { return std::lround(rho / dt); }

void CasParams::validate() const {
  require_positive(delta_x, "delta_x");
  require_positive(delta_y, "delta_y");
}

RssParams rss_params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("rss: parameters must be a JSON object");
  reject_unknown(j, {"rho", "mu", "dt", "a_lon_min_br", "a_lon_max_acc", "a_lon_max_br", "a_lat_min_br", "a_lat_max_acc"},
                 "rss");
  RssParams p;
  read_key(j, "rho", p.rho);
  read_key(j, "mu", p.mu);
  read_key(j, "dt", p.dt);
  read_key(j, "a_lon_min_br", p.a_lon_min_br);
  read_key(j, "a_lon_max_acc", p.a_lon_max_acc);
  read_key(j, "a_lon_max_br", p.a_lon_max_br);
  read_key(j, "a_lat_min_br", p.a_lat_min_br);
  read_key(j, "a_lat_max_acc", p.a_lat_max_acc);
  p.validate();
  return p;
}

nlohmann::json to_json(const RssParams& p) {
  return {{"rho", p.rho},
          {"mu", p.mu},
          {"dt", p.dt},
          {"a_lon_min_br", p.a_lon_min_br},
          {"a_lon_max_acc", p.a_lon_max_acc},
          {"a_lon_max_br", p.a_lon_max_br},
          {"a_lat_min_br", p.a_lat_min_br},
          {"a_lat_max_acc", p.a_lat_max_acc}};
}

CasParams cas_params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("cas: parameters must be a JSON object");
  reject_unknown(j, {"delta_x", "delta_y", "per_agent"}, "cas");
  CasParams p;
  read_key(j, "delta_x", p.delta_x);
  read_key(j, "delta_y", p.delta_y);
  read_key(j, "per_agent", p.per_agent);
  p.validate();
  return p;
}

nlohmann::json to_json(const CasParams& p) {
  return {{"delta_x", p.delta_x}, {"delta_y", p.delta_y}, {"per_agent", p.per_agent}};
}

} // namespace rsstl::rss
