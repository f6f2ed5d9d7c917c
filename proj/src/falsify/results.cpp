#include "rsstl/falsify/results.hpp"

#include "rsstl/util/format.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rsstl::falsify {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

template <class T>
T parse_uint(const std::string& s) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

} // namespace

std::string results_header() {
  std::string h = "index,seed";
  for (auto name : sim::scenario_field_names()) h += "," + std::string(name);
  return h + ",rob_rss,rob_cas,blamed_atom,accepted";
}

void write_results_csv(std::ostream& out, std::span<const SearchRecord> records) {
  out << results_header() << '\n';
  for (const auto& r : records) {
    out << r.index << ',' << r.scenario.seed;
    for (double v : r.scenario.to_vector()) out << ',' << util::format_double(v);
    out << ',' << util::format_double(r.rob_rss) << ',' << util::format_double(r.rob_cas) << ',' << r.blamed_atom
        << ',' << (r.accepted ? 1 : 0) << '\n';
  }
}

std::string results_csv(std::span<const SearchRecord> records) {
  std::ostringstream o;
  write_results_csv(o, records);
  return o.str();
}

std::vector<SearchRecord> read_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("results CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != results_header()) throw std::runtime_error("results CSV: unexpected header");
  constexpr std::size_t cols = 2 + sim::kScenarioDims + 4;
  std::vector<SearchRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto f = split(line);
    try {
      if (f.size() != cols) throw std::invalid_argument("expected " + std::to_string(cols) + " fields");
      SearchRecord r;
      r.index = parse_uint<std::size_t>(f[0]);
      std::array<double, sim::kScenarioDims> v{};
      for (std::size_t k = 0; k < sim::kScenarioDims; ++k) v[k] = util::parse_double(f[2 + k]);
      r.scenario = sim::ScenarioParams::from_vector(v, parse_uint<std::uint64_t>(f[1]));
      r.rob_rss = util::parse_double(f[2 + sim::kScenarioDims]);
      r.rob_cas = util::parse_double(f[3 + sim::kScenarioDims]);
      r.blamed_atom = f[4 + sim::kScenarioDims];
      const auto& acc = f[5 + sim::kScenarioDims];
      if (acc != "0" && acc != "1") throw std::invalid_argument("accepted must be 0 or 1");
      r.accepted = acc == "1";
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::runtime_error("results CSV line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

} // namespace rsstl::falsify
