#pragma once

#include <stdexcept>
#include <string>

#include "bsw/mrat.hpp"

namespace bsw {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rational expressions over the registered variables: + - * / ^ (integer exponents), parentheses,
// integer and decimal-free rational literals. Example: "(q^2 - 1)/q", "-q^-3", "p0*p1^-1".
MRat parse_mrat(const std::string& text);

}  // namespace bsw
