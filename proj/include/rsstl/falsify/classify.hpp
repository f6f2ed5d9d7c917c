#pragma once

#include "rsstl/falsify/objective.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace rsstl::falsify {

/// Sign counts of one robustness column. Zero is its own count here but is
/// treated as a violation everywhere else.
struct SignCounts {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t zero = 0;

  std::size_t violations() const { return neg + zero; }
  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

struct ClassificationTable {
  std::size_t total = 0;
  SignCounts rss;
  SignCounts cas;
  // joint cells, first sign RSS, second CAS; "n" includes zero
  std::size_t pp = 0;
  std::size_t pn = 0;
  std::size_t np = 0;
  std::size_t nn = 0;
  std::map<std::string, std::size_t> per_atom;  // blamed atom over RSS violations

  double rss_violation_rate() const;
  double cas_violation_rate() const;

  /// Adds the counts of another table.
  void merge(const ClassificationTable& other);

  /// Joint table, marginals, and the per-predicate breakdown as plain text.
  std::string to_text() const;
  nlohmann::json to_json() const;

  friend bool operator==(const ClassificationTable&, const ClassificationTable&) = default;
};

/// Name used in per_atom for a violating record without a blamed atom.
inline constexpr const char* kNoAtom = "(none)";

bool is_violation(double robustness);

ClassificationTable classify_batch(std::span<const SearchRecord> records);

/// Records worth keeping as test cases: negative RSS robustness.
std::vector<SearchRecord> useful_tests(std::span<const SearchRecord> records);

} // namespace rsstl::falsify
