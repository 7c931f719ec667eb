#pragma once

// Polynomial expression front end. Grammar (whitespace insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := nat | nat '/' nat | 'x' | '(' expr ')' | '-' factor
// Implicit multiplication is rejected. Exponents are nonnegative integer
// literals. render() output parses back to the same polynomial.

#include <stdexcept>
#include <string>

#include "superirr/bigpoly.hpp"

namespace superirr {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

RatPoly parse_polynomial(const std::string& text);

std::string render(const RatPoly& f);
std::string render(const IntPoly& f);

}  // namespace superirr
