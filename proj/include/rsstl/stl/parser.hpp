#pragma once

#include "rsstl/stl/formula.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsstl::stl {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses the textual STL grammar:
///
///   formula  := true | atom | ! formula | formula (/\ | \/ | ->) formula
///             | (X|F|G) interval? formula | formula (U|R|RW) interval? formula
///             | ( formula )
///   atom     := linear (>= | <=) number      linear := [-] term ((+|-) term)*
///   term     := ident | number * ident
///   interval := ([|() number , (number|inf) (]|))
///
/// Binding, loosest first: -> (right associative), \/, /\, U/R/RW (not
/// associative), then the prefix operators. An omitted interval is [0,inf).
Formula parse_formula(std::string_view text);

} // namespace rsstl::stl
