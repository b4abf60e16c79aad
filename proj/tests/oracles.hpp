#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library's recursive definitions.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "rtm/forest.hpp"
#include "rtm/hopf.hpp"
#include "rtm/words.hpp"

namespace rtm::oracle {

/// Number of rooted trees with n vertices from the Euler-transform recurrence
///   a(n+1) = (1/n) sum_{k=1}^{n} (sum_{d | k} d a(d)) a(n-k+1).
inline std::vector<std::uint64_t> tree_counts(std::size_t max_n) {
  std::vector<std::uint64_t> a(max_n + 1, 0);
  a[1] = 1;
  for (std::size_t n = 1; n < max_n; ++n) {
    std::uint64_t sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      std::uint64_t s = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) s += d * a[d];
      sum += s * a[n - k + 1];
    }
    a[n + 1] = sum / n;
  }
  return a;
}

/// A forest flattened to a parent array (-1 marks a root).
inline void flatten(const Tree& t, int parent, std::vector<int>& parents,
                    std::vector<std::vector<int>>& kids) {
  const int id = static_cast<int>(parents.size());
  parents.push_back(parent);
  kids.emplace_back();
  if (parent >= 0) kids[parent].push_back(id);
  for (const auto& c : t.children()) flatten(c, id, parents, kids);
}

inline Tree rebuild(int v, const std::vector<std::vector<int>>& kids, std::uint64_t keep) {
  std::vector<Tree> children;
  for (int c : kids[v])
    if ((keep >> c) & 1U) children.push_back(rebuild(c, kids, keep));
  return Tree::graft(std::move(children));
}

/// Induced forest on the vertex subset `keep`: a kept vertex is a root when
/// its parent is not kept.
inline Forest induced(const std::vector<int>& parents, const std::vector<std::vector<int>>& kids,
                      std::uint64_t keep) {
  std::vector<Tree> trees;
  for (std::size_t v = 0; v < parents.size(); ++v) {
    if (!((keep >> v) & 1U)) continue;
    if (parents[v] < 0 || !((keep >> parents[v]) & 1U)) trees.push_back(rebuild(static_cast<int>(v), kids, keep));
  }
  return Forest(std::move(trees));
}

/// Coproduct by admissible cuts: sum over vertex sets K closed under taking
/// parents of (forest off K) (x) (forest on K).
inline TensorElem coproduct_by_cuts(const Forest& f) {
  std::vector<int> parents;
  std::vector<std::vector<int>> kids;
  for (const auto& t : f.trees()) flatten(t, -1, parents, kids);
  const std::size_t n = parents.size();
  TensorElem out;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    bool closed = true;
    for (std::size_t v = 0; v < n && closed; ++v)
      if (((k >> v) & 1U) && parents[v] >= 0 && !((k >> parents[v]) & 1U)) closed = false;
    if (!closed) continue;
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    out.add_term(induced(parents, kids, all & ~k), induced(parents, kids, k), 1);
  }
  return out;
}

/// All words of length at most len.
inline std::vector<Word> words_up_to(std::size_t len) {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= len; ++l)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << l); ++m) out.push_back(Word::from_mask(l, m));
  return out;
}

inline std::vector<Forest> forests_up_to(std::size_t d, std::size_t from = 0) {
  std::vector<Forest> out;
  for (std::size_t k = from; k <= d; ++k) {
    auto level = enumerate_forests(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Deterministic random generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Word word(std::size_t max_len) {
    const std::size_t len = below(max_len + 1);
    return Word::from_mask(len, rng_());
  }

  Word word_exact(std::size_t len) { return Word::from_mask(len, rng_()); }

  /// Random polynomial with up to `terms` words of length <= max_len and
  /// small integer coefficients.
  Poly poly(std::size_t max_len, std::size_t terms = 3) {
    Poly p;
    const std::size_t count = 1 + below(terms);
    for (std::size_t i = 0; i < count; ++i)
      p.add_term(word(max_len), static_cast<long>(below(7)) - 3);
    return p;
  }

  Forest forest(std::size_t max_deg, std::size_t min_deg = 0) {
    const std::size_t d = min_deg + below(max_deg - min_deg + 1);
    const auto all = enumerate_forests(d);
    return all[below(all.size())];
  }

  HElem helem(std::size_t max_deg, std::size_t terms = 3, std::size_t min_deg = 0) {
    HElem h;
    const std::size_t count = 1 + below(terms);
    for (std::size_t i = 0; i < count; ++i)
      h.add_term(forest(max_deg, min_deg), static_cast<long>(below(9)) - 4);
    return h;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rtm::oracle
