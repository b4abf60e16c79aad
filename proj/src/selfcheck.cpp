#include "rtm/selfcheck.hpp"

#include <array>
#include <functional>
#include <map>
#include <random>
#include <tuple>

#include "rtm/basis.hpp"
#include "rtm/diamond.hpp"
#include "rtm/relations.hpp"
#include "rtm/rtm.hpp"

namespace rtm {

namespace {

// Rooted tree counts for n = 1..10.
constexpr std::array<std::size_t, 10> kTreeCounts{1, 1, 2, 4, 9, 20, 48, 115, 286, 719};

using Triple = std::map<std::tuple<Forest, Forest, Forest>, Rational>;

Triple coassoc_left(const Forest& f) {  // (id (x) Delta) Delta
  Triple out;
  for (const TensorElem cop = coproduct(f); const auto& [k, c] : cop.terms())
    for (const TensorElem inner = coproduct(k.second); const auto& [k2, c2] : inner.terms())
      out[{k.first, k2.first, k2.second}] += c * c2;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Triple coassoc_right(const Forest& f) {  // (Delta (x) id) Delta
  Triple out;
  for (const TensorElem cop = coproduct(f); const auto& [k, c] : cop.terms())
    for (const TensorElem inner = coproduct(k.first); const auto& [k1, c1] : inner.terms())
      out[{k1.first, k1.second, k.second}] += c * c1;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<Word> words_up_to(std::size_t len) {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= len; ++l)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << l); ++m) out.push_back(Word::from_mask(l, m));
  return out;
}

std::vector<Forest> forests_up_to(std::size_t d, std::size_t from = 0) {
  std::vector<Forest> out;
  for (std::size_t k = from; k <= d; ++k) {
    auto level = enumerate_forests(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

CheckResult check(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
    if (r.passed) r.detail = "ok";
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::size_t max_degree) {
  const std::size_t D = std::max<std::size_t>(max_degree, 1);
  std::vector<CheckResult> results;

  results.push_back(check("tree enumeration counts", [&]() -> std::string {
    for (std::size_t n = 1; n <= std::min<std::size_t>(std::max<std::size_t>(D, 10), 10); ++n) {
      if (enumerate_trees(n).size() != kTreeCounts[n - 1]) return "count mismatch at n=" + std::to_string(n);
      if (enumerate_forests(n - 1).size() != kTreeCounts[n - 1])
        return "forest count mismatch at n=" + std::to_string(n - 1);
    }
    return {};
  }));

  results.push_back(check("coproduct examples", []() -> std::string {
    const Forest one, v = parse_forest("[]"), l2 = parse_forest("[[]]"), vv = parse_forest("[] []"),
                      t = parse_forest("[[][]]");
    TensorElem e;
    if (coproduct(one) != TensorElem(one, one)) return "Delta(1)";
    e = TensorElem(v, one);
    e += TensorElem(one, v);
    if (coproduct(v) != e) return "Delta(vertex)";
    e = TensorElem(l2, one);
    e += TensorElem(v, v);
    e += TensorElem(one, l2);
    if (coproduct(l2) != e) return "Delta(ladder 2)";
    e = TensorElem(vv, one);
    e += TensorElem(v, v, 2);
    e += TensorElem(one, vv);
    if (coproduct(vv) != e) return "Delta(vertex^2)";
    e = TensorElem(t, one);
    e += TensorElem(vv, v);
    e += TensorElem(v, l2, 2);
    e += TensorElem(one, t);
    if (coproduct(t) != e) return "Delta(B+(vertex^2))";
    return {};
  }));

  results.push_back(check("coassociativity", [&]() -> std::string {
    for (const auto& f : forests_up_to(std::min<std::size_t>(D, 6)))
      if (coassoc_left(f) != coassoc_right(f)) return "fails on " + f.code();
    return {};
  }));

  results.push_back(check("rooted tree map examples", []() -> std::string {
    if (rtm_apply(HElem(parse_forest("[] []")), Poly::x()) != parse_poly("xyy - xxy")) return "(vertex^2)~(x)";
    if (rtm_apply(HElem(parse_forest("[[][]]")), Poly::x()) != parse_poly("-xxxy - 2xxyy + xyxy + 2xyyy"))
      return "B+(vertex^2)~(x)";
    return {};
  }));

  results.push_back(check("x-prefix bridge f~(xw) = x(F_f <> w)", [&]() -> std::string {
    for (const auto& f : forests_up_to(std::min<std::size_t>(D, 6)))
      for (const auto& w : words_up_to(4)) {
        const Poly xw(w.prepend(Letter::X));
        if (rtm_apply(f, xw) != left_mul(Letter::X, diamond(sigma(f), Poly(w))))
          return "fails on " + f.code() + " / " + to_string(w);
      }
    return {};
  }));

  results.push_back(check("diamond laws and sigma homomorphism", [&]() -> std::string {
    std::mt19937_64 rng(20240601);
    const auto words = words_up_to(std::min<std::size_t>(D, 4));
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (const auto& a : words)
      for (const auto& b : words)
        if (diamond(a, b) != diamond(b, a)) return "commutativity";
    for (int i = 0; i < 100; ++i) {
      const Poly a(words[pick(rng)]), b(words[pick(rng)]), c(words[pick(rng)]);
      if (diamond(diamond(a, b), c) != diamond(a, diamond(b, c))) return "associativity";
      if (diamond(a * Poly::z(), b) != diamond(a, b) * Poly::z()) return "z-shift identity";
    }
    const auto forests = forests_up_to(std::min<std::size_t>(D, 5));
    std::uniform_int_distribution<std::size_t> pick_f(0, forests.size() - 1);
    for (int i = 0; i < 100; ++i) {
      const Forest& f = forests[pick_f(rng)];
      const Forest& g = forests[pick_f(rng)];
      if (sigma(forest_product(f, g)) != diamond(sigma(f), sigma(g))) return "sigma homomorphism";
    }
    return {};
  }));

  results.push_back(check("relation family f_{m,n}", [&]() -> std::string {
    for (std::size_t s = 2; s <= std::max<std::size_t>(D, 2); ++s)
      for (std::size_t m = 1; m < s; ++m) {
        const auto rep = verify_fmn(m, s - m);
        if (!rep.all_hold()) return "fails for (" + std::to_string(m) + "," + std::to_string(s - m) + ")";
      }
    return {};
  }));

  results.push_back(check("relations vanish on all short words", [&]() -> std::string {
    const auto words = words_up_to(4);
    for (std::size_t s = 2; s <= std::min<std::size_t>(D, 6); ++s)
      for (std::size_t m = 1; m < s; ++m) {
        const HElem f = build_fmn(m, s - m);
        for (const auto& w : words)
          if (!rtm_apply(f, Poly(w)).is_zero())
            return "nonzero for (" + std::to_string(m) + "," + std::to_string(s - m) + ") on " + to_string(w);
      }
    return {};
  }));

  results.push_back(check("basis U_d", [&]() -> std::string {
    for (std::size_t d = 1; d <= std::min<std::size_t>(D, 8); ++d) {
      const auto u = basis_forests(d);
      if (u.size() != (std::size_t{1} << (d - 1))) return "size at d=" + std::to_string(d);
      const auto b = basis_matrix(d);
      if (rank(b) != u.size()) return "rank at d=" + std::to_string(d);
      if (!check_mod2_invertible(d)) return "mod 2 at d=" + std::to_string(d);
    }
    return {};
  }));

  results.push_back(check("kernel dimensions", [&]() -> std::string {
    for (std::size_t d = 1; d <= std::min<std::size_t>(D, 6); ++d) {
      const std::size_t expected = enumerate_forests(d).size() - (std::size_t{1} << (d - 1));
      const auto kernel = sigma_kernel(d);
      if (kernel.size() != expected) return "dimension at d=" + std::to_string(d);
      for (const auto& rel : kernel)
        if (!rho_is_zero_on_x(rel)) return "kernel element with nonzero map at d=" + std::to_string(d);
    }
    return {};
  }));

  return results;
}

}  // namespace rtm
