#pragma once

#include "newtonpoly/puiseux.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace newtonpoly {

/// Parse failure; offset is the byte position of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, std::string message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        code_(std::move(code)),
        offset_(offset) {}
  const std::string& code() const { return code_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string code_;
  std::size_t offset_;
};

/// Grammar (whitespace insensitive, explicit '*' required):
///   expr     := term (("+" | "-") term)*
///   term     := factor ("*" factor)*
///   factor   := base ("^" exponent)?
///   base     := rational | var | "(" expr ")" | "-" factor
///   exponent := integer | "(" integer ("/" integer)? ")"
///   rational := digits ("." digits)? ("/" digits)?
///   var      := x1 | x2 | x | y
/// U+2212 is accepted as a minus sign.
PuiseuxPoly parse_expression(std::string_view text);

}  // namespace newtonpoly
