#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace homalg::trees {

// Immutable planar binary tree; a single leaf is the 0-vertex tree.
// Shared subtree storage keeps copies cheap.
class Tree {
 public:
  Tree() = default;  // the leaf

  static Tree leaf() { return Tree(); }
  static Tree graft(const Tree& left, const Tree& right);

  bool is_leaf() const { return node_ == nullptr; }
  const Tree& left() const;
  const Tree& right() const;

  int vertices() const;
  int leaf_count() const { return vertices() + 1; }

  // In-order vertex labels: each internal vertex is labelled by the number of
  // vertices of the subtree it roots; the leaf alone reads [0].
  std::vector<int> word() const;
  std::string label() const;  // "[0]", "[213]", or "[1 10 2 ...]" past 9 vertices

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Tree::Node {
  Tree left, right;
  int vertices;
};

inline int Tree::vertices() const { return node_ ? node_->vertices : 0; }

// All trees with n vertices, ordered lexicographically by word.
std::vector<Tree> enumerate_trees(int n);

// Position of y within enumerate_trees(y.vertices()).
int tree_index(const Tree& y);

// Face map d_i, 0 <= i <= n, deleting the i-th leaf of an n-vertex tree and
// merging its two adjacent vertices (an outer leaf deletion prunes instead).
Tree face(const Tree& y, int i);

enum class ProductSymbol { left, right };  // the two dialgebra products

std::string product_name(ProductSymbol s);  // UTF-8 turnstile glyphs

// Orientation marker at position i of a v-vertex tree, 0 <= i <= v:
// boundary positions look at the root's outer edge, interior position i at
// whether leaf i hangs off its parent as a left or a right child.
ProductSymbol bullet(const Tree& y, int i);

// Structure map keeping leaves {0, n_1, n_1+n_2, ..., n_1+..+n_k}: collapses
// each inner block of an (n_1+..+n_k)-vertex tree, landing in k vertices.
Tree r0(std::span<const int> ns, const Tree& y);

// Structure map keeping the i-th block (1-based): deletes every leaf outside
// leaves n_1+..+n_{i-1} .. n_1+..+n_i, landing in n_i vertices.
Tree ri(std::span<const int> ns, int i, const Tree& y);

}  // namespace homalg::trees
