#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "rtm/forest.hpp"
#include "rtm/rational.hpp"

namespace rtm {

/// Element of the rooted-tree Hopf algebra: a finite rational combination of
/// forests. Zero coefficients are never stored.
class HElem {
 public:
  using Terms = std::map<Forest, Rational>;

  HElem() = default;
  HElem(const Forest& f, const Rational& c = 1);  // NOLINT
  HElem(const Tree& t, const Rational& c = 1) : HElem(Forest(t), c) {}  // NOLINT

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Forest& f) const;

  /// True iff every forest has degree d (the zero element is d-homogeneous for every d).
  bool is_homogeneous(std::size_t d) const;

  void add_term(const Forest& f, const Rational& c);

  HElem& operator+=(const HElem& other);
  HElem& operator-=(const HElem& other);
  HElem& operator*=(const Rational& c);

  friend HElem operator+(HElem a, const HElem& b) { return a += b; }
  friend HElem operator-(HElem a, const HElem& b) { return a -= b; }
  friend HElem operator*(const Rational& c, HElem a) { return a *= c; }
  friend HElem operator-(HElem a) { return a *= -1; }
  friend bool operator==(const HElem&, const HElem&) = default;

 private:
  Terms terms_;
};

HElem h_add(const HElem& a, const HElem& b);
HElem h_scale(const Rational& c, const HElem& a);
HElem h_mul(const HElem& a, const HElem& b);

/// Element of H (x) H, keyed by (left, right) forest pairs.
class TensorElem {
 public:
  using Key = std::pair<Forest, Forest>;
  using Terms = std::map<Key, Rational>;

  TensorElem() = default;
  TensorElem(const Forest& left, const Forest& right, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Forest& left, const Forest& right) const;

  void add_term(const Forest& left, const Forest& right, const Rational& c);
  TensorElem& operator+=(const TensorElem& other);
  TensorElem& operator*=(const Rational& c);

  /// Exchanges the two tensor slots.
  TensorElem swapped() const;

  friend bool operator==(const TensorElem&, const TensorElem&) = default;

 private:
  Terms terms_;
};

TensorElem tensor_mul(const TensorElem& u, const TensorElem& v);

/// Connes-Kreimer coproduct. Tree values are memoized process-wide.
TensorElem coproduct(const Tree& t);
TensorElem coproduct(const Forest& f);
TensorElem coproduct(const HElem& a);

// Text forms: "3*[[][]] + 8*[] [[][]]", "2*([] (x) [[]])".
HElem parse_helem(std::string_view text);
std::string to_string(const HElem& a);
std::string to_string(const TensorElem& u);

}  // namespace rtm
