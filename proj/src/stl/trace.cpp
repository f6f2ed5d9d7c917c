#include "rsstl/stl/trace.hpp"

#include "rsstl/util/format.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rsstl::stl {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  for (auto& f : fields) {
    auto b = f.find_first_not_of(" \t");
    auto e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? "" : f.substr(b, e - b + 1);
  }
  return fields;
}

} // namespace

Trace::Trace(double dt) : dt_(dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("trace sampling period must be positive");
}

Trace& Trace::add_channel(std::string name, std::vector<double> samples) {
  if (name.empty()) throw std::invalid_argument("empty channel name");
  if (has_channel(name)) throw std::invalid_argument("duplicate channel '" + name + "'");
  if (samples.empty()) throw std::invalid_argument("channel '" + name + "' has no samples");
  if (!names_.empty() && samples.size() != n_)
    throw std::invalid_argument("channel '" + name + "' has " + std::to_string(samples.size()) +
                                " samples, expected " + std::to_string(n_));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i]))
      throw std::invalid_argument("channel '" + name + "' sample " + std::to_string(i) + " is not finite");
  }
  n_ = samples.size();
  names_.push_back(std::move(name));
  data_.push_back(std::move(samples));
  return *this;
}

bool Trace::has_channel(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::span<const double> Trace::channel(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("trace has no channel '" + std::string(name) + "'");
  return data_[static_cast<std::size_t>(it - names_.begin())];
}

Trace Trace::with_channel(std::string_view name, std::vector<double> samples) const {
  Trace out(dt_);
  for (std::size_t k = 0; k < names_.size(); ++k) {
    out.add_channel(names_[k], names_[k] == name ? samples : data_[k]);
  }
  if (!has_channel(name)) out.add_channel(std::string(name), std::move(samples));
  return out;
}

void Trace::write_csv(std::ostream& out, double t0) const {
  out << "t";
  for (const auto& n : names_) out << ',' << n;
  out << '\n';
  for (std::size_t i = 0; i < n_; ++i) {
    out << util::format_double(t0 + static_cast<double>(i) * dt_);
    for (const auto& col : data_) out << ',' << util::format_double(col[i]);
    out << '\n';
  }
}

Trace Trace::read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("trace CSV is empty");
  const auto header = split_csv_line(line);
  if (header.empty() || header.front() != "t")
    throw std::invalid_argument("trace CSV header must start with 't'");
  std::vector<std::vector<double>> cols(header.size());
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw std::invalid_argument("trace CSV row " + std::to_string(row) + " has " + std::to_string(fields.size()) +
                                  " fields, expected " + std::to_string(header.size()));
    for (std::size_t c = 0; c < fields.size(); ++c) {
      try {
        cols[c].push_back(util::parse_double(fields[c]));
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("trace CSV row " + std::to_string(row) + ", column '" + header[c] +
                                    "': not a number '" + fields[c] + "'");
      }
    }
  }
  const auto& t = cols.front();
  if (t.size() < 2) throw std::invalid_argument("trace CSV needs at least two samples to infer dt");
  const double dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(dt > 0.0)) throw std::invalid_argument("trace CSV time column is not increasing");
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double step = t[i] - t[i - 1];
    if (!(step > 0.0)) throw std::invalid_argument("trace CSV time column is not strictly increasing at row " + std::to_string(i + 2));
    const double expected = t.front() + static_cast<double>(i) * dt;
    if (std::abs(t[i] - expected) > 1e-9 * std::max(std::abs(expected), dt))
      throw std::invalid_argument("trace CSV time column is not uniform at row " + std::to_string(i + 2));
  }
  Trace tr(dt);
  for (std::size_t c = 1; c < header.size(); ++c) tr.add_channel(header[c], std::move(cols[c]));
  return tr;
}

Trace Trace::read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open trace file '" + path + "'");
  return read_csv(in);
}

} // namespace rsstl::stl
