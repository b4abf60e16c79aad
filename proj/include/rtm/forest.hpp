#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace rtm {

/// A non-planar rooted tree in canonical form.
///
/// Children are kept sorted, so two trees are isomorphic exactly when their
/// encodings `code()` agree. The encoding uses the grammar `tree := "[" tree* "]"`.
/// Trees are immutable and cheap to copy (shared node storage).
///
/// Order: by degree, then by encoding with '[' < ']'.
class Tree {
 public:
  /// The single-vertex tree.
  Tree();

  /// Tree whose root has the given children (any order).
  static Tree graft(std::vector<Tree> children);

  const std::vector<Tree>& children() const { return node_->children; }
  std::size_t degree() const { return node_->degree; }
  const std::string& code() const { return node_->code; }

  bool is_vertex() const { return node_->children.empty(); }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.node_ == b.node_ || a.node_->code == b.node_->code;
  }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

 private:
  struct Node {
    std::vector<Tree> children;
    std::string code;
    std::size_t degree;
  };
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A commutative product of trees; the empty forest is the unit (printed "1").
class Forest {
 public:
  Forest() : code_("1") {}
  explicit Forest(std::vector<Tree> trees);
  Forest(const Tree& tree);  // NOLINT: a tree is a one-component forest

  const std::vector<Tree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  std::size_t degree() const { return degree_; }
  const std::string& code() const { return code_; }

  friend bool operator==(const Forest& a, const Forest& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

 private:
  std::vector<Tree> trees_;
  std::size_t degree_ = 0;
  std::string code_;
};

Forest parse_forest(std::string_view text);
Tree parse_tree(std::string_view text);
std::string print_forest(const Forest& f);

/// Grafts every tree of f onto a new common root; bplus(1) is the vertex.
Tree bplus(const Forest& f);
Forest forest_product(const Forest& f, const Forest& g);
std::size_t degree(const Forest& f);

/// All trees with n vertices, in canonical order. Requires n >= 1.
std::vector<Tree> enumerate_trees(std::size_t n);
/// All forests with n vertices, in canonical order.
std::vector<Forest> enumerate_forests(std::size_t n);

/// The chain with n vertices as a forest; ladder(0) is the empty forest.
Forest ladder(std::size_t n);

/// Wraps f in k successive grafts; k = 0 returns f unchanged.
Forest chain_over(const Forest& f, std::size_t k);

}  // namespace rtm

template <>
struct std::hash<rtm::Tree> {
  std::size_t operator()(const rtm::Tree& t) const noexcept {
    return std::hash<std::string>{}(t.code());
  }
};

template <>
struct std::hash<rtm::Forest> {
  std::size_t operator()(const rtm::Forest& f) const noexcept {
    return std::hash<std::string>{}(f.code());
  }
};
