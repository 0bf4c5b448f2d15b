#include "homalg/trees.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace homalg::trees {

Tree Tree::graft(const Tree& left, const Tree& right) {
  Tree t;
  t.node_ = std::make_shared<const Node>(
      Node{left, right, left.vertices() + right.vertices() + 1});
  return t;
}

const Tree& Tree::left() const {
  if (!node_) throw std::invalid_argument("Tree::left: leaf has no children");
  return node_->left;
}

const Tree& Tree::right() const {
  if (!node_) throw std::invalid_argument("Tree::right: leaf has no children");
  return node_->right;
}

namespace {

void word_into(const Tree& y, std::vector<int>& out) {
  if (y.is_leaf()) return;
  word_into(y.left(), out);
  out.push_back(y.vertices());
  word_into(y.right(), out);
}

}  // namespace

std::vector<int> Tree::word() const {
  if (is_leaf()) return {0};
  std::vector<int> w;
  w.reserve(size_t(vertices()));
  word_into(*this, w);
  return w;
}

std::string Tree::label() const {
  const std::vector<int> w = word();
  const bool compact =
      std::all_of(w.begin(), w.end(), [](int x) { return x <= 9; });
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !compact) s += ' ';
    s += std::to_string(w[i]);
  }
  s += ']';
  return s;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() == b.is_leaf();
  return a.vertices() == b.vertices() && a.left() == b.left() &&
         a.right() == b.right();
}

namespace {

const std::vector<Tree>& stratum(int n) {
  static std::mutex mu;
  static std::vector<std::vector<Tree>> cache;
  std::scoped_lock lock(mu);
  if (int(cache.size()) > n) return cache[size_t(n)];
  for (int v = int(cache.size()); v <= n; ++v) {
    std::vector<Tree> out;
    if (v == 0) {
      out.push_back(Tree::leaf());
    } else {
      for (int lv = 0; lv < v; ++lv) {
        for (const Tree& l : cache[size_t(lv)]) {
          for (const Tree& r : cache[size_t(v - 1 - lv)]) {
            out.push_back(Tree::graft(l, r));
          }
        }
      }
      std::sort(out.begin(), out.end(), [](const Tree& a, const Tree& b) {
        return a.word() < b.word();
      });
    }
    cache.push_back(std::move(out));
  }
  return cache[size_t(n)];
}

}  // namespace

std::vector<Tree> enumerate_trees(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_trees: negative vertex count");
  return stratum(n);
}

int tree_index(const Tree& y) {
  const std::vector<Tree>& all = stratum(y.vertices());
  const std::vector<int> w = y.word();
  for (size_t i = 0; i < all.size(); ++i) {
    if (all[i].word() == w) return int(i);
  }
  throw std::logic_error("tree_index: tree not found in its stratum");
}

Tree face(const Tree& y, int i) {
  const int n = y.vertices();
  if (n < 1) throw std::invalid_argument("face: the leaf has no faces");
  if (i < 0 || i > n) throw std::invalid_argument("face: index out of range");
  const Tree& l = y.left();
  const Tree& r = y.right();
  const int nl = l.leaf_count();
  if (i < nl) {
    if (l.is_leaf()) return r;  // deleting leaf 0 of |∨r prunes to r
    return Tree::graft(face(l, i), r);
  }
  if (r.is_leaf()) return l;
  return Tree::graft(l, face(r, i - nl));
}

std::string product_name(ProductSymbol s) {
  return s == ProductSymbol::left ? "⊣" : "⊢";
}

namespace {

// Whether leaf i (strictly interior) hangs off its parent to the left.
bool leaf_is_left_child(const Tree& y, int i) {
  const Tree& l = y.left();
  const int nl = l.leaf_count();
  if (i < nl) {
    if (l.is_leaf()) return true;  // that leaf IS the left child of this vertex
    return leaf_is_left_child(l, i);
  }
  if (y.right().is_leaf()) return false;
  return leaf_is_left_child(y.right(), i - nl);
}

}  // namespace

ProductSymbol bullet(const Tree& y, int i) {
  const int v = y.vertices();
  if (v < 1) throw std::invalid_argument("bullet: the leaf carries no products");
  if (i < 0 || i > v) throw std::invalid_argument("bullet: index out of range");
  if (i == 0) {
    return y.left().is_leaf() ? ProductSymbol::left : ProductSymbol::right;
  }
  if (i == v) {
    return y.right().is_leaf() ? ProductSymbol::right : ProductSymbol::left;
  }
  return leaf_is_left_child(y, i) ? ProductSymbol::left : ProductSymbol::right;
}

namespace {

std::vector<int> block_offsets(std::span<const int> ns) {
  std::vector<int> acc(ns.size() + 1, 0);
  for (size_t j = 0; j < ns.size(); ++j) {
    if (ns[j] < 1) throw std::invalid_argument("block sizes must be >= 1");
    acc[j + 1] = acc[j] + ns[j];
  }
  return acc;
}

// Applies the listed face maps right-to-left, the composition order the
// structure maps are written in.
Tree apply_faces(Tree y, const std::vector<int>& indices) {
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    y = face(y, *it);
  }
  return y;
}

}  // namespace

Tree r0(std::span<const int> ns, const Tree& y) {
  const std::vector<int> acc = block_offsets(ns);
  if (y.vertices() != acc.back()) {
    throw std::invalid_argument("r0: tree size does not match the blocks");
  }
  std::vector<int> indices;
  for (size_t j = 0; j < ns.size(); ++j) {
    for (int t = acc[j] + 1; t <= acc[j + 1] - 1; ++t) indices.push_back(t);
  }
  return apply_faces(y, indices);
}

Tree ri(std::span<const int> ns, int i, const Tree& y) {
  const std::vector<int> acc = block_offsets(ns);
  if (y.vertices() != acc.back()) {
    throw std::invalid_argument("ri: tree size does not match the blocks");
  }
  if (i < 1 || i > int(ns.size())) {
    throw std::invalid_argument("ri: block index out of range");
  }
  std::vector<int> indices;
  for (int t = 0; t <= acc[i - 1] - 1; ++t) indices.push_back(t);
  for (int t = acc[i] + 1; t <= acc.back(); ++t) indices.push_back(t);
  return apply_faces(y, indices);
}

}  // namespace homalg::trees
