#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rtm {

using Rational = mpq_class;

/// Thrown by every text parser in the library; carries the byte offset of the
/// first offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Thrown when an operation's precondition on the value domain is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parses "p" or "p/q" (no sign) starting at text[pos]; advances pos.
Rational parse_unsigned_rational(std::string_view text, std::size_t& pos);

std::string to_string(const Rational& q);

}  // namespace rtm
