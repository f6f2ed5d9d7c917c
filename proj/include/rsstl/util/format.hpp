#pragma once

#include <string>
#include <string_view>

namespace rsstl::util {

// Shortest decimal text that parses back to the same double. Infinities are
// written as `inf` / `-inf`.
std::string format_double(double v);

// Inverse of format_double; also accepts `+inf`, `-inf`, `inf`.
// Throws std::invalid_argument if the whole string is not a number.
double parse_double(std::string_view text);

} // namespace rsstl::util
