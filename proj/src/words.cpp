#include "rtm/words.hpp"

#include <cctype>
#include <stdexcept>

namespace rtm {

// ---------------------------------------------------------------------------
// Word

namespace {

void check_length(std::size_t n) {
  if (n > Word::kMaxLength)
    throw std::length_error("word longer than " + std::to_string(Word::kMaxLength) + " letters");
}

std::uint64_t low_bits(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

Word Word::from_mask(std::size_t length, std::uint64_t mask) {
  check_length(length);
  return Word(length, mask & low_bits(length));
}

Word Word::parse(std::string_view letters) {
  if (letters == "1") return Word();
  Word w;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    switch (letters[i]) {
      case 'x': w = w.append(Letter::X); break;
      case 'y': w = w.append(Letter::Y); break;
      default: throw ParseError(std::string("unexpected letter '") + letters[i] + "'", i);
    }
  }
  return w;
}

Word Word::drop_first() const { return Word(length_ - 1, mask_ & low_bits(length_ - 1)); }

Word Word::append(Letter l) const {
  check_length(length_ + 1);
  return Word(length_ + 1, (mask_ << 1) | static_cast<std::uint64_t>(l));
}

Word Word::prepend(Letter l) const {
  check_length(length_ + 1);
  return Word(length_ + 1, mask_ | (static_cast<std::uint64_t>(l) << length_));
}

Word operator+(const Word& a, const Word& b) {
  if (a.empty()) return b;
  check_length(a.length_ + b.length_);
  return Word(a.length_ + b.length_, (a.mask_ << b.length_) | b.mask_);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s(w.length(), 'x');
  for (std::size_t i = 0; i < w.length(); ++i)
    if (w.at(i) == Letter::Y) s[i] = 'y';
  return s;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Word& w, const Rational& c) { add_term(w, c); }

Rational Poly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::is_homogeneous(std::size_t d) const {
  for (const auto& [w, c] : terms_)
    if (w.length() != d) return false;
  return true;
}

bool Poly::ends_in_y() const {
  for (const auto& [w, c] : terms_)
    if (w.empty() || w.last() != Letter::Y) return false;
  return true;
}

bool Poly::in_h1() const {
  for (const auto& [w, c] : terms_)
    if (!w.empty() && w.last() != Letter::Y) return false;
  return true;
}

void Poly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [v, c] : a.terms_)
    for (const auto& [w, d] : b.terms_) out.add_term(v + w, c * d);
  return out;
}

Poly concat(const Poly& a, const Poly& b) { return a * b; }

Poly right_mul(const Poly& v, const Poly& w) { return v * w; }

Poly right_mul(const Poly& v, Letter l) {
  Poly out;
  for (const auto& [w, c] : v.terms()) out.add_term(w.append(l), c);
  return out;
}

Poly left_mul(Letter l, const Poly& v) {
  Poly out;
  for (const auto& [w, c] : v.terms()) out.add_term(w.prepend(l), c);
  return out;
}

Poly strip_y(const Poly& v) {
  Poly out;
  for (const auto& [w, c] : v.terms()) {
    if (w.empty() || w.last() != Letter::Y)
      throw DomainError("term does not end in y: " + to_string(w));
    out.add_term(w.drop_last(), c);
  }
  return out;
}

Poly op_R(const Poly& v) {
  Poly out;
  for (const auto& [w, c] : v.terms()) {
    if (w.empty() || w.last() != Letter::Y)
      throw DomainError("term does not end in y: " + to_string(w));
    const Word stem = w.drop_last();
    out.add_term(stem.append(Letter::X).append(Letter::Y), c);
    out.add_term(stem.append(Letter::Y).append(Letter::Y), 2 * c);
  }
  return out;
}

Poly op_R_pow(const Poly& v, std::size_t k) {
  Poly out = v;
  for (std::size_t i = 0; i < k; ++i) out = op_R(out);
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool is_letter(char c) { return c == 'x' || c == 'y'; }

}  // namespace

Poly parse_poly(std::string_view text) {
  Poly out;
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  bool first = true;
  while (true) {
    skip_space(text, pos);
    if (pos == text.size()) break;
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_space(text, pos);
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;
    if (pos == text.size()) throw ParseError("missing term", pos);

    Rational coef = 1;
    bool has_coef = false;
    bool need_word = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coef = parse_unsigned_rational(text, pos);
      has_coef = true;
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_space(text, pos);
        need_word = true;
      }
    }
    Word word;
    if (pos < text.size() && is_letter(text[pos])) {
      while (pos < text.size() && is_letter(text[pos])) {
        word = word.append(text[pos] == 'x' ? Letter::X : Letter::Y);
        ++pos;
        skip_space(text, pos);
      }
    } else if (need_word && pos < text.size() && text[pos] == '1') {
      ++pos;
    } else if (!has_coef || need_word) {
      if (pos < text.size())
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      throw ParseError("expected word", pos);
    }
    out.add_term(word, sign * coef);
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational mag = negative ? Rational(-c) : c;
    if (w.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag.get_den() != 1)
      out += to_string(mag) + "*";
    else if (mag != 1)
      out += to_string(mag);
    out += to_string(w);
  }
  return out;
}

}  // namespace rtm
