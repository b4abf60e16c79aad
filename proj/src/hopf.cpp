#include "rtm/hopf.hpp"

#include <cctype>

#include "rtm/detail/memo.hpp"

namespace rtm {

// ---------------------------------------------------------------------------
// HElem

HElem::HElem(const Forest& f, const Rational& c) { add_term(f, c); }

Rational HElem::coefficient(const Forest& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool HElem::is_homogeneous(std::size_t d) const {
  for (const auto& [f, c] : terms_)
    if (f.degree() != d) return false;
  return true;
}

void HElem::add_term(const Forest& f, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HElem& HElem::operator+=(const HElem& other) {
  for (const auto& [f, c] : other.terms_) add_term(f, c);
  return *this;
}

HElem& HElem::operator-=(const HElem& other) {
  for (const auto& [f, c] : other.terms_) add_term(f, -c);
  return *this;
}

HElem& HElem::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, coef] : terms_) coef *= c;
  return *this;
}

HElem h_add(const HElem& a, const HElem& b) { return a + b; }

HElem h_scale(const Rational& c, const HElem& a) { return c * a; }

HElem h_mul(const HElem& a, const HElem& b) {
  HElem out;
  for (const auto& [f, c] : a.terms())
    for (const auto& [g, d] : b.terms()) out.add_term(forest_product(f, g), c * d);
  return out;
}

// ---------------------------------------------------------------------------
// TensorElem

TensorElem::TensorElem(const Forest& left, const Forest& right, const Rational& c) {
  add_term(left, right, c);
}

Rational TensorElem::coefficient(const Forest& left, const Forest& right) const {
  auto it = terms_.find(Key{left, right});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElem::add_term(const Forest& left, const Forest& right, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElem& TensorElem::operator+=(const TensorElem& other) {
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElem& TensorElem::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coef] : terms_) coef *= c;
  return *this;
}

TensorElem TensorElem::swapped() const {
  TensorElem out;
  for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
  return out;
}

TensorElem tensor_mul(const TensorElem& u, const TensorElem& v) {
  TensorElem out;
  for (const auto& [a, c] : u.terms())
    for (const auto& [b, d] : v.terms())
      out.add_term(forest_product(a.first, b.first), forest_product(a.second, b.second), c * d);
  return out;
}

// ---------------------------------------------------------------------------
// Coproduct: Delta(B+(f)) = B+(f) (x) 1 + (id (x) B+) Delta(f), extended
// multiplicatively over forests.

namespace {

detail::ConcurrentMemo<std::string, TensorElem>& tree_coproduct_memo() {
  static detail::ConcurrentMemo<std::string, TensorElem> memo;
  return memo;
}

}  // namespace

TensorElem coproduct(const Tree& t) {
  return *tree_coproduct_memo().get_or_compute(t.code(), [&] {
    const TensorElem below = coproduct(Forest(t.children()));
    TensorElem out{Forest(t), Forest()};
    for (const auto& [k, c] : below.terms()) out.add_term(k.first, Forest(bplus(k.second)), c);
    return out;
  });
}

TensorElem coproduct(const Forest& f) {
  TensorElem out{Forest(), Forest()};
  for (const auto& t : f.trees()) out = tensor_mul(out, coproduct(t));
  return out;
}

TensorElem coproduct(const HElem& a) {
  TensorElem out;
  for (const auto& [f, c] : a.terms()) {
    TensorElem part = coproduct(f);
    part *= c;
    out += part;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

// Appends "c*body" with sign handling to out; coefficient 1 is omitted.
void append_term(std::string& out, const Rational& c, const std::string& body) {
  const bool negative = c < 0;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  const Rational mag = negative ? Rational(-c) : c;
  if (mag != 1) out += to_string(mag) + "*";
  out += body;
}

}  // namespace

HElem parse_helem(std::string_view text) {
  HElem out;
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size()) throw ParseError("empty expression", pos);
  bool first = true;
  while (true) {
    skip_space(text, pos);
    Rational sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_space(text, pos);
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;
    if (pos == text.size()) throw ParseError("missing term", pos);

    Rational coef = 1;
    bool need_forest = true;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coef = parse_unsigned_rational(text, pos);
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_space(text, pos);
      } else if (pos == text.size() || text[pos] != '[') {
        need_forest = false;  // a bare number is a multiple of the empty forest
      }
    }
    Forest forest;
    if (need_forest) {
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
      try {
        forest = parse_forest(text.substr(start, pos - start));
      } catch (const ParseError& e) {
        throw ParseError("invalid forest", start + e.position());
      }
    }
    out.add_term(forest, sign * coef);
    skip_space(text, pos);
    if (pos == text.size()) break;
  }
  return out;
}

std::string to_string(const HElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [f, c] : a.terms()) append_term(out, c, f.code());
  return out;
}

std::string to_string(const TensorElem& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : u.terms())
    append_term(out, c, "(" + k.first.code() + " (x) " + k.second.code() + ")");
  return out;
}

}  // namespace rtm
