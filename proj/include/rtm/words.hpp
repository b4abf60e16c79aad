#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "rtm/rational.hpp"

namespace rtm {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

/// A word over {x, y}, packed into a 64-bit mask (first letter most
/// significant, x = 0, y = 1). Within one length, lexicographic order with
/// x < y is integer order of the mask, so the derived ordering is graded-lex.
class Word {
 public:
  static constexpr std::size_t kMaxLength = 64;

  constexpr Word() = default;
  static Word letter(Letter l) { return Word(1, static_cast<std::uint64_t>(l)); }
  static Word from_mask(std::size_t length, std::uint64_t mask);
  static Word parse(std::string_view letters);  // "x", "xyy", "1"

  std::size_t length() const { return length_; }
  bool empty() const { return length_ == 0; }
  std::uint64_t mask() const { return mask_; }

  Letter at(std::size_t i) const {
    return static_cast<Letter>((mask_ >> (length_ - 1 - i)) & 1U);
  }
  Letter last() const { return static_cast<Letter>(mask_ & 1U); }
  Letter first() const { return at(0); }

  /// The word without its last letter.
  Word drop_last() const { return Word(length_ - 1, mask_ >> 1); }
  /// The word without its first letter.
  Word drop_first() const;
  Word append(Letter l) const;
  Word prepend(Letter l) const;

  friend Word operator+(const Word& a, const Word& b);  // concatenation

  friend constexpr bool operator==(const Word&, const Word&) = default;
  friend constexpr std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  constexpr Word(std::size_t length, std::uint64_t mask)
      : mask_(mask), length_(static_cast<std::uint32_t>(length)) {}

  std::uint64_t mask_ = 0;
  std::uint32_t length_ = 0;
};

std::string to_string(const Word& w);

/// Element of Q<x,y>: a finite rational combination of words.
class Poly {
 public:
  using Terms = std::map<Word, Rational>;

  Poly() = default;
  Poly(const Word& w, const Rational& c = 1);  // NOLINT
  static Poly constant(const Rational& c) { return Poly(Word(), c); }
  static Poly x() { return Poly(Word::letter(Letter::X)); }
  static Poly y() { return Poly(Word::letter(Letter::Y)); }
  /// z = x + y
  static Poly z() { return x() + y(); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  bool is_homogeneous(std::size_t d) const;
  /// Every word is nonempty and ends in y (membership in hy).
  bool ends_in_y() const;
  /// Membership in Q + hy.
  bool in_h1() const;

  void add_term(const Word& w, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= -1; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  /// Concatenation product.
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

Poly concat(const Poly& a, const Poly& b);
/// R_w(v) = v w
Poly right_mul(const Poly& v, const Poly& w);
Poly right_mul(const Poly& v, Letter l);
/// Left multiplication by a single letter: l v.
Poly left_mul(Letter l, const Poly& v);
/// Inverse of R_y on hy; throws DomainError naming the first word not ending in y.
Poly strip_y(const Poly& v);
/// R = R_y R_{x+2y} R_y^{-1}
Poly op_R(const Poly& v);
/// op_R applied k times.
Poly op_R_pow(const Poly& v, std::size_t k);

Poly parse_poly(std::string_view text);
std::string to_string(const Poly& p);

}  // namespace rtm
