#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rsstl::stl {

/// Uniformly sampled, finite, multi-channel signal. Sample i is at time i*dt.
class Trace {
 public:
  explicit Trace(double dt);

  /// Channels must all have the same length and finite values; a channel
  /// name may only be added once.
  Trace& add_channel(std::string name, std::vector<double> samples);

  double dt() const { return dt_; }
  std::size_t size() const { return n_; }
  bool has_channel(std::string_view name) const;
  /// Throws std::out_of_range naming the channel if it is absent.
  std::span<const double> channel(std::string_view name) const;
  const std::vector<std::string>& channel_names() const { return names_; }

  /// Copy with one channel's samples replaced.
  Trace with_channel(std::string_view name, std::vector<double> samples) const;

  /// CSV with header `t,<chan1>,...`; t is the sample time i*dt offset by `t0`.
  void write_csv(std::ostream& out, double t0 = 0.0) const;

  /// Reads the CSV layout above. The t column must be strictly increasing
  /// and uniform to 1e-9 relative tolerance; dt is inferred from it.
  static Trace read_csv(std::istream& in);
  static Trace read_csv_file(const std::string& path);

 private:
  double dt_;
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> data_;
};

} // namespace rsstl::stl
