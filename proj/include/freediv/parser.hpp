#ifndef FREEDIV_PARSER_HPP
#define FREEDIV_PARSER_HPP

#include <stdexcept>
#include <string>

#include "freediv/polynomial.hpp"

namespace freediv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) +
                           ")"),
        position(position) {}
  size_t position;
};

// Grammar: integer literals, declared variables, + - * ^ and parentheses
// with the usual precedence; ^ takes a non-negative integer exponent; no
// implicit multiplication.
Polynomial parse_expression(const std::string& text, const RingPtr& ring);

}  // namespace freediv

#endif
