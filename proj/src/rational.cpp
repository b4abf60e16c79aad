#include "rtm/rational.hpp"

#include <cctype>

namespace rtm {

namespace {

std::string take_digits(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digit", start);
  return std::string(text.substr(start, pos - start));
}

}  // namespace

Rational parse_unsigned_rational(std::string_view text, std::size_t& pos) {
  const std::string num = take_digits(text, pos);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_pos = pos;
    den = take_digits(text, pos);
    if (mpz_class(den) == 0) throw ParseError("zero denominator", den_pos);
  }
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace rtm
