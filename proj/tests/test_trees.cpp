#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "homalg/trees.hpp"

using namespace homalg::trees;

namespace {

Tree from_label(const std::string& label, int n) {
  for (const Tree& y : enumerate_trees(n)) {
    if (y.label() == label) return y;
  }
  FAIL("no " << n << "-vertex tree labelled " << label);
  return Tree::leaf();
}

}  // namespace

TEST_CASE("enumeration counts are the Catalan numbers") {
  const std::vector<int> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (size_t n = 0; n < catalan.size(); ++n) {
    CHECK(enumerate_trees(static_cast<int>(n)).size() == static_cast<size_t>(catalan[n]));
  }
}

TEST_CASE("word labels of the small trees") {
  CHECK(Tree::leaf().label() == "[0]");
  CHECK(enumerate_trees(1)[0].label() == "[1]");
  std::vector<std::string> two;
  for (const Tree& y : enumerate_trees(2)) two.push_back(y.label());
  CHECK(two == std::vector<std::string>{"[12]", "[21]"});
  std::vector<std::string> three;
  for (const Tree& y : enumerate_trees(3)) three.push_back(y.label());
  CHECK(three == std::vector<std::string>{"[123]", "[131]", "[213]", "[312]", "[321]"});
}

TEST_CASE("grafting matches the word rule") {
  const Tree leaf = Tree::leaf();
  const Tree one = Tree::graft(leaf, leaf);
  CHECK(one.label() == "[1]");
  CHECK(one.vertices() == 1);
  CHECK(one.leaf_count() == 2);
  CHECK(Tree::graft(one, leaf).label() == "[12]");
  CHECK(Tree::graft(leaf, one).label() == "[21]");
  CHECK(Tree::graft(one, one).label() == "[131]");
  // Word labels past nine vertices fall back to space separation.
  Tree comb = leaf;
  for (int i = 0; i < 10; ++i) comb = Tree::graft(comb, leaf);
  CHECK(comb.label() == "[1 2 3 4 5 6 7 8 9 10]");
}

TEST_CASE("word labels are injective through five vertices") {
  for (int n = 0; n <= 5; ++n) {
    const std::vector<Tree> trees = enumerate_trees(n);
    std::set<std::string> labels;
    for (const Tree& y : trees) labels.insert(y.label());
    CHECK(labels.size() == trees.size());
  }
}

TEST_CASE("tree_index inverts enumeration") {
  for (int n = 0; n <= 4; ++n) {
    const std::vector<Tree> trees = enumerate_trees(n);
    for (size_t i = 0; i < trees.size(); ++i) {
      CHECK(tree_index(trees[i]) == static_cast<int>(i));
    }
  }
}

TEST_CASE("structural equality is by shape, not identity") {
  const Tree a = Tree::graft(Tree::graft(Tree::leaf(), Tree::leaf()), Tree::leaf());
  const Tree b = Tree::graft(Tree::graft(Tree::leaf(), Tree::leaf()), Tree::leaf());
  CHECK(a == b);
  CHECK(a != Tree::graft(Tree::leaf(), Tree::graft(Tree::leaf(), Tree::leaf())));
}

TEST_CASE("face maps on the smallest trees") {
  const Tree one = from_label("[1]", 1);
  CHECK(face(one, 0) == Tree::leaf());
  CHECK(face(one, 1) == Tree::leaf());
  const Tree left_comb = from_label("[12]", 2);
  for (int i = 0; i <= 2; ++i) CHECK(face(left_comb, i) == one);
  CHECK_THROWS_AS(face(left_comb, 3), std::invalid_argument);
  CHECK_THROWS_AS(face(left_comb, -1), std::invalid_argument);
  CHECK_THROWS_AS(face(Tree::leaf(), 0), std::invalid_argument);
}

TEST_CASE("deleting an inner leaf merges, deleting an outer leaf prunes") {
  // [131] = [1] grafted with [1]; leaf 0 is the outer left leaf.
  const Tree balanced = from_label("[131]", 3);
  CHECK(face(balanced, 0) == from_label("[21]", 2));
  CHECK(face(balanced, 3) == from_label("[12]", 2));
  // Leaf 1 is the right child of the left vertex: merging it leaves [21].
  CHECK(face(balanced, 1) == from_label("[21]", 2));
  CHECK(face(balanced, 2) == from_label("[12]", 2));
}

TEST_CASE("presimplicial relations hold exhaustively through six vertices") {
  for (int n = 2; n <= 6; ++n) {
    for (const Tree& y : enumerate_trees(n)) {
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          CHECK(face(face(y, j), i) == face(face(y, i), j - 1));
        }
      }
    }
  }
}

TEST_CASE("bullet boundary cases read the root's children") {
  const Tree left_comb = from_label("[12]", 2);   // [1] v |
  const Tree right_comb = from_label("[21]", 2);  // | v [1]
  CHECK(bullet(right_comb, 0) == ProductSymbol::left);
  CHECK(bullet(left_comb, 0) == ProductSymbol::right);
  CHECK(bullet(left_comb, 2) == ProductSymbol::right);
  CHECK(bullet(right_comb, 2) == ProductSymbol::left);
  CHECK_THROWS_AS(bullet(left_comb, 3), std::invalid_argument);
}

TEST_CASE("bullet interior cases read the leaf's child side") {
  // In [131] leaf 1 hangs as a right child ('/'), leaf 2 as a left child ('\').
  const Tree balanced = from_label("[131]", 3);
  CHECK(bullet(balanced, 0) == ProductSymbol::right);
  CHECK(bullet(balanced, 1) == ProductSymbol::right);
  CHECK(bullet(balanced, 2) == ProductSymbol::left);
  CHECK(bullet(balanced, 3) == ProductSymbol::left);
  CHECK(product_name(ProductSymbol::left) == "⊣");   // turnstile pointing left
  CHECK(product_name(ProductSymbol::right) == "⊢");  // turnstile pointing right
}

TEST_CASE("r0 with unit blocks is the identity") {
  for (int k = 0; k <= 5; ++k) {
    const std::vector<int> ones(static_cast<size_t>(k), 1);
    for (const Tree& y : enumerate_trees(k)) {
      CHECK(r0(ones, y) == y);
    }
  }
}

TEST_CASE("r0 with one block collapses to the single 1-tree") {
  const std::vector<int> whole = {3};
  for (const Tree& y : enumerate_trees(3)) {
    CHECK(r0(whole, y) == from_label("[1]", 1));
  }
}

TEST_CASE("r0 worked example: blocks (2,1) keep only the middle face") {
  // With blocks (2,1) the composite misses d_0, d_2, d_3, so it is d_1 alone.
  const std::vector<int> blocks = {2, 1};
  for (const Tree& y : enumerate_trees(3)) {
    CHECK(r0(blocks, y) == face(y, 1));
  }
}

TEST_CASE("ri worked examples at three vertices") {
  // Block layout (2,1): the first block keeps leaves 0..2, so R_1 is d_3.
  const std::vector<int> two_one = {2, 1};
  for (const Tree& y : enumerate_trees(3)) {
    CHECK(ri(two_one, 1, y) == face(y, 3));
  }
  // Block layout (1,2): the second block keeps leaves 1..3, so R_2 is d_0.
  const std::vector<int> one_two = {1, 2};
  for (const Tree& y : enumerate_trees(3)) {
    CHECK(ri(one_two, 2, y) == face(y, 0));
  }
  CHECK(ri(one_two, 2, from_label("[131]", 3)) == from_label("[21]", 2));
}

TEST_CASE("r maps reject shape mismatches") {
  const Tree balanced = from_label("[131]", 3);
  CHECK_THROWS_AS(r0(std::vector<int>{1, 1}, balanced), std::invalid_argument);
  CHECK_THROWS_AS(ri(std::vector<int>{2, 2}, 1, balanced), std::invalid_argument);
  CHECK_THROWS_AS(ri(std::vector<int>{2, 1}, 3, balanced), std::invalid_argument);
}
