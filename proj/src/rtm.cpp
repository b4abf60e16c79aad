#include "rtm/rtm.hpp"

#include "rtm/detail/memo.hpp"
#include "rtm/diamond.hpp"

namespace rtm {

namespace {

struct ForestWordHash {
  std::size_t operator()(const std::pair<std::string, Word>& k) const noexcept {
    std::size_t h = std::hash<std::string>{}(k.first);
    return h ^ (std::hash<std::uint64_t>{}(k.second.mask()) + 0x9e3779b97f4a7c15ULL + (h << 6) +
                (h >> 2) + k.second.length());
  }
};

using ForestWordMemo = detail::ConcurrentMemo<std::pair<std::string, Word>, Poly, ForestWordHash>;

ForestWordMemo& apply_memo() {
  static ForestWordMemo memo;
  return memo;
}

detail::ConcurrentMemo<std::string, Poly>& tree_on_x_memo() {
  static detail::ConcurrentMemo<std::string, Poly> memo;
  return memo;
}

Poly tree_on_x(const Tree& t) {
  if (t.is_vertex()) return Poly(Word::parse("xy"));
  return *tree_on_x_memo().get_or_compute(
      t.code(), [&] { return op_R(rtm_apply(Forest(t.children()), Word::letter(Letter::X))); });
}

Poly apply_uncached(const Forest& f, const Word& w) {
  if (w.length() == 1) {
    const Letter v = w.last();
    if (f.trees().size() == 1) return rtm_tree_on_letter(f.trees().front(), v);
    // f = g h with g the first canonical tree.
    const Forest g(f.trees().front());
    const Forest h(std::vector<Tree>(f.trees().begin() + 1, f.trees().end()));
    return rtm_apply(g, rtm_apply(h, w));
  }
  const Word head = w.drop_last();
  const Word tail = Word::letter(w.last());
  Poly out;
  for (const TensorElem cop = coproduct(f); const auto& [k, c] : cop.terms()) {
    const Poly left = rtm_apply(k.first, head);
    if (left.is_zero()) continue;
    const Poly right = rtm_apply(k.second, tail);
    if (right.is_zero()) continue;
    out += c * (left * right);
  }
  return out;
}

}  // namespace

Poly rtm_tree_on_letter(const Tree& t, Letter v) {
  Poly p = tree_on_x(t);
  if (v == Letter::Y) p *= -1;
  return p;
}

Poly rtm_apply(const Forest& f, const Word& w) {
  if (f.empty()) return Poly(w);
  if (w.empty()) return Poly();
  return *apply_memo().get_or_compute({f.code(), w}, [&] { return apply_uncached(f, w); });
}

Poly rtm_apply(const Forest& f, const Poly& w) {
  Poly out;
  for (const auto& [word, c] : w.terms()) out += c * rtm_apply(f, word);
  return out;
}

Poly rtm_apply(const HElem& f, const Poly& w) {
  Poly out;
  for (const auto& [forest, c] : f.terms()) out += c * rtm_apply(forest, w);
  return out;
}

Poly rtm_apply_via_sigma(const HElem& f, const Poly& w) {
  Poly rest;
  for (const auto& [word, c] : w.terms()) {
    if (word.empty() || word.first() != Letter::X)
      throw DomainError("word does not start with x: " + to_string(word));
    rest.add_term(word.drop_first(), c);
  }
  return left_mul(Letter::X, diamond(sigma(f), rest));
}

bool rho_is_zero_on_x(const HElem& f) {
  if (f.coefficient(Forest()) != 0)
    throw DomainError("rho_is_zero_on_x: element has a term on the empty forest");
  return rtm_apply(f, Poly::x()).is_zero();
}

}  // namespace rtm
