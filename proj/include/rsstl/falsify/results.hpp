#pragma once

#include "rsstl/falsify/objective.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rsstl::falsify {

/// index,seed,<14 scenario fields>,rob_rss,rob_cas,blamed_atom,accepted
std::string results_header();

void write_results_csv(std::ostream& out, std::span<const SearchRecord> records);
std::string results_csv(std::span<const SearchRecord> records);

/// Throws std::runtime_error with the line number on malformed input.
std::vector<SearchRecord> read_results_csv(std::istream& in);

} // namespace rsstl::falsify
