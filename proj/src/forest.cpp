#include "rtm/forest.hpp"

#include <algorithm>
#include <mutex>

#include "rtm/rational.hpp"

namespace rtm {

namespace {

std::strong_ordering compare_codes(std::size_t deg_a, const std::string& a, std::size_t deg_b,
                                   const std::string& b) {
  if (auto c = deg_a <=> deg_b; c != 0) return c;
  // '[' (0x5b) < ']' (0x5d), so plain byte comparison is the intended order.
  return a.compare(b) <=> 0;
}

}  // namespace

Tree::Tree() : node_(std::make_shared<const Node>(Node{{}, "[]", 1})) {}

Tree Tree::graft(std::vector<Tree> children) {
  std::sort(children.begin(), children.end());
  std::string code = "[";
  std::size_t deg = 1;
  for (const auto& c : children) {
    code += c.code();
    deg += c.degree();
  }
  code += ']';
  return Tree(std::make_shared<const Node>(Node{std::move(children), std::move(code), deg}));
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return compare_codes(a.degree(), a.code(), b.degree(), b.code());
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
  if (trees_.empty()) {
    code_ = "1";
    return;
  }
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) code_ += ' ';
    code_ += trees_[i].code();
    degree_ += trees_[i].degree();
  }
}

Forest::Forest(const Tree& tree) : trees_{tree}, degree_(tree.degree()), code_(tree.code()) {}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  return compare_codes(a.degree_, a.code_, b.degree_, b.code_);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ForestParser {
 public:
  explicit ForestParser(std::string_view text) : text_(text) {}

  Forest forest() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty forest", pos_);
    if (text_[pos_] == '1') {
      ++pos_;
      skip_space();
      expect_end();
      return Forest();
    }
    std::vector<Tree> trees;
    while (pos_ < text_.size()) {
      trees.push_back(tree());
      skip_space();
    }
    return Forest(std::move(trees));
  }

  Tree single_tree() {
    skip_space();
    Tree t = tree();
    skip_space();
    expect_end();
    return t;
  }

 private:
  Tree tree() {
    if (pos_ >= text_.size() || text_[pos_] != '[') {
      if (pos_ < text_.size() && text_[pos_] == ']') throw ParseError("unbalanced ']'", pos_);
      throw ParseError("expected '['", pos_);
    }
    const std::size_t open = pos_;
    ++pos_;
    std::vector<Tree> children;
    while (true) {
      if (pos_ >= text_.size()) throw ParseError("unbalanced '['", open);
      const char c = text_[pos_];
      if (c == ']') {
        ++pos_;
        break;
      }
      if (c != '[') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      children.push_back(tree());
    }
    return Tree::graft(std::move(children));
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n'))
      ++pos_;
  }

  void expect_end() const {
    if (pos_ != text_.size())
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(std::string_view text) { return ForestParser(text).forest(); }

Tree parse_tree(std::string_view text) { return ForestParser(text).single_tree(); }

std::string print_forest(const Forest& f) { return f.code(); }

// ---------------------------------------------------------------------------
// Construction

Tree bplus(const Forest& f) { return Tree::graft(f.trees()); }

Forest forest_product(const Forest& f, const Forest& g) {
  if (f.empty()) return g;
  if (g.empty()) return f;
  std::vector<Tree> trees;
  trees.reserve(f.trees().size() + g.trees().size());
  std::merge(f.trees().begin(), f.trees().end(), g.trees().begin(), g.trees().end(),
             std::back_inserter(trees));
  return Forest(std::move(trees));
}

std::size_t degree(const Forest& f) { return f.degree(); }

Forest ladder(std::size_t n) {
  if (n == 0) return Forest();
  Tree t;
  for (std::size_t i = 1; i < n; ++i) t = Tree::graft({t});
  return Forest(t);
}

Forest chain_over(const Forest& f, std::size_t k) {
  Forest out = f;
  for (std::size_t i = 0; i < k; ++i) out = Forest(bplus(out));
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration
//
// Trees of degree n are the grafts of forests of degree n-1, and forests of
// degree n are multisets of trees of smaller degree; both tables are built
// together, one degree at a time, and shared between callers.

namespace {

struct EnumerationTable {
  std::mutex mutex;
  std::vector<std::vector<Tree>> trees{{}};        // trees[n], trees[0] unused
  std::vector<std::vector<Forest>> forests{{Forest()}};
};

EnumerationTable& table() {
  static EnumerationTable t;
  return t;
}

// Appends every multiset drawn from `pool[from..]` with total degree `remaining`.
void multisets(const std::vector<Tree>& pool, std::size_t from, std::size_t remaining,
               std::vector<Tree>& current, std::vector<Forest>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (pool[i].degree() > remaining) continue;
    current.push_back(pool[i]);
    multisets(pool, i, remaining - pool[i].degree(), current, out);
    current.pop_back();
  }
}

void extend_to(EnumerationTable& t, std::size_t n) {
  while (t.forests.size() <= n) {
    const std::size_t d = t.forests.size();
    // Trees of degree d come from forests of degree d-1.
    std::vector<Tree> trees;
    trees.reserve(t.forests[d - 1].size());
    for (const auto& f : t.forests[d - 1]) trees.push_back(bplus(f));
    std::sort(trees.begin(), trees.end());
    t.trees.push_back(std::move(trees));

    std::vector<Tree> pool;
    for (std::size_t k = 1; k <= d; ++k)
      pool.insert(pool.end(), t.trees[k].begin(), t.trees[k].end());
    std::vector<Forest> forests;
    std::vector<Tree> current;
    multisets(pool, 0, d, current, forests);
    std::sort(forests.begin(), forests.end());
    t.forests.push_back(std::move(forests));
  }
}

}  // namespace

std::vector<Tree> enumerate_trees(std::size_t n) {
  if (n == 0) throw DomainError("enumerate_trees: degree must be at least 1");
  auto& t = table();
  std::lock_guard lock(t.mutex);
  extend_to(t, n);
  return t.trees[n];
}

std::vector<Forest> enumerate_forests(std::size_t n) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  extend_to(t, n);
  return t.forests[n];
}

}  // namespace rtm
