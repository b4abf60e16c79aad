#include "rtm/diamond.hpp"

#include <functional>

#include "rtm/detail/memo.hpp"

namespace rtm {

namespace {

struct WordPairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(p.first.mask());
    h ^= std::hash<std::uint64_t>{}(p.second.mask()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= (p.first.length() << 8) | p.second.length();
    return h;
  }
};

detail::ConcurrentMemo<std::pair<Word, Word>, Poly, WordPairHash>& diamond_memo() {
  static detail::ConcurrentMemo<std::pair<Word, Word>, Poly, WordPairHash> memo;
  return memo;
}

detail::ConcurrentMemo<std::string, Poly>& sigma_memo() {
  static detail::ConcurrentMemo<std::string, Poly> memo;
  return memo;
}

Poly diamond_words(const Word& v, const Word& w) {
  // v = va a, w = wb b
  const Word va = v.drop_last();
  const Word wb = w.drop_last();
  const Letter a = v.last();
  const Letter b = w.last();
  Poly out;
  if (a == Letter::X && b == Letter::X) {
    out = right_mul(diamond(va, w), Letter::X);
    out -= right_mul(diamond(va.append(Letter::Y), wb), Letter::X);
  } else if (a == Letter::X && b == Letter::Y) {
    out = right_mul(diamond(va, w), Letter::X);
    out += right_mul(diamond(v, wb), Letter::Y);
  } else if (a == Letter::Y && b == Letter::X) {
    out = right_mul(diamond(va, w), Letter::Y);
    out += right_mul(diamond(v, wb), Letter::X);
  } else {
    out = right_mul(diamond(va, w), Letter::Y);
    out -= right_mul(diamond(va.append(Letter::X), wb), Letter::Y);
  }
  return out;
}

}  // namespace

Poly diamond(const Word& v, const Word& w) {
  if (v.empty()) return Poly(w);
  if (w.empty()) return Poly(v);
  const auto key = v < w ? std::pair{v, w} : std::pair{w, v};
  return *diamond_memo().get_or_compute(key, [&] { return diamond_words(v, w); });
}

Poly diamond(const Poly& v, const Poly& w) {
  Poly out;
  for (const auto& [a, c] : v.terms())
    for (const auto& [b, d] : w.terms()) {
      const Rational cd = c * d;
      for (const Poly prod = diamond(a, b); const auto& [u, e] : prod.terms()) out.add_term(u, cd * e);
    }
  return out;
}

Poly sigma(const Tree& t) {
  if (t.is_vertex()) return Poly::y();
  return *sigma_memo().get_or_compute(t.code(), [&] { return op_R(sigma(Forest(t.children()))); });
}

Poly sigma(const Forest& f) {
  Poly out = Poly::constant(1);
  for (const auto& t : f.trees()) out = diamond(out, sigma(t));
  return out;
}

Poly sigma(const HElem& a) {
  Poly out;
  for (const auto& [f, c] : a.terms()) out += c * sigma(f);
  return out;
}

}  // namespace rtm
