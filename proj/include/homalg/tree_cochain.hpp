#pragma once

#include <array>
#include <span>
#include <vector>

#include "homalg/cochain.hpp"
#include "homalg/hom_dialgebra.hpp"

namespace homalg {

// Degree-n cochain on a hom-dialgebra: one multilinear map D^n -> D per
// n-vertex planar tree, stored in the canonical tree order, each commuting
// with alpha.  The operations mirror the hom-associative ones with the
// structure maps rerouting the tree argument.
class TreeCochain {
 public:
  static TreeCochain checked(DialgebraPtr d, int degree,
                             std::vector<DenseTensor> per_tree);
  static TreeCochain zero(DialgebraPtr d, int degree);
  static TreeCochain identity(DialgebraPtr d);

  int degree() const { return degree_; }
  int shifted_degree() const { return degree_ - 1; }
  const DialgebraPtr& dialgebra() const { return dlg_; }
  const std::vector<DenseTensor>& tensors() const { return c_; }
  const DenseTensor& at_tree(int tree_idx) const;
  const DenseTensor& at_tree(const trees::Tree& y) const;
  bool is_zero() const;

  TreeCochain& operator+=(const TreeCochain& o);
  TreeCochain& operator-=(const TreeCochain& o);
  TreeCochain& negate();
  TreeCochain& scale(const Rational& r);
  friend TreeCochain operator+(TreeCochain a, const TreeCochain& b) { return a += b; }
  friend TreeCochain operator-(TreeCochain a, const TreeCochain& b) { return a -= b; }
  friend bool operator==(const TreeCochain& a, const TreeCochain& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }

  static TreeCochain unchecked(DialgebraPtr d, int degree,
                               std::vector<DenseTensor> per_tree);

 private:
  TreeCochain(DialgebraPtr d, int degree, std::vector<DenseTensor> per_tree);
  DialgebraPtr dlg_;
  int degree_ = 0;
  std::vector<DenseTensor> c_;
};

bool is_alpha_compatible(const TreeCochain& f);

// The two-case multiplication pi: the right product on the left comb [12],
// the left product on [21].
TreeCochain pi_multiplication(const DialgebraPtr& d);

// Constant-in-tree extension of a cochain over (A, mu, alpha) into the
// diagonal dialgebra: f(y; a_vec) = f(a_vec) for every y.  The target must
// carry the same dimension, products both equal to mu, and the same alpha.
TreeCochain embed_hochschild(const Cochain& f, const DialgebraPtr& diag);

TreeCochain partial_composition(const TreeCochain& f, const TreeCochain& g, int i);
TreeCochain gamma_alpha(const TreeCochain& f, std::span<const TreeCochain> gs);
TreeCochain brace(const TreeCochain& f, std::span<const TreeCochain> gs);
TreeCochain circle(const TreeCochain& f, const TreeCochain& g);
TreeCochain bracket(const TreeCochain& f, const TreeCochain& g);
TreeCochain dot(const TreeCochain& f, const TreeCochain& g);
TreeCochain hochschild_delta(const TreeCochain& f);
TreeCochain differential_d(const TreeCochain& f);

// For each 3-vertex tree (canonical order [123],[131],[213],[312],[321] by
// word), the closed-form difference the {pi}{pi} computation must reproduce,
// evaluated directly from the products; no axioms assumed.
std::vector<DenseTensor> pipi_case_table(const HomDialgebra& d);

// {pi}{pi} computed operadically, one tensor per 3-vertex tree.
std::vector<DenseTensor> pipi_operadic(const DialgebraPtr& d);

// Constraint matrix / basis of the compatible subspace in flat coordinates
// (tree-major: tensors concatenated in canonical tree order).
Matrix alpha_constraint_matrix(const HomDialgebra& d, int n);
std::vector<Vec> alpha_subspace_basis(const HomDialgebra& d, int n);

}  // namespace homalg
