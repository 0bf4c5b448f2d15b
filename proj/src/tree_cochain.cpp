#include "homalg/tree_cochain.hpp"

#include <stdexcept>

namespace homalg {

using trees::Tree;
using trees::enumerate_trees;
using trees::tree_index;

namespace {

void require_same_dialgebra(const TreeCochain& a, const TreeCochain& b) {
  if (a.dialgebra() != b.dialgebra()) {
    throw std::invalid_argument("tree cochain operation: mixed dialgebras");
  }
}

std::vector<int> ones_with(int m, int i, int n) {
  std::vector<int> ns(size_t(m), 1);
  ns[size_t(i - 1)] = n;
  return ns;
}

}  // namespace

TreeCochain::TreeCochain(DialgebraPtr d, int degree, std::vector<DenseTensor> per_tree)
    : dlg_(std::move(d)), degree_(degree), c_(std::move(per_tree)) {
  if (!dlg_) throw std::invalid_argument("TreeCochain: null dialgebra");
  if (degree_ < 1) throw std::invalid_argument("TreeCochain: degree must be >= 1");
  const size_t count = enumerate_trees(degree_).size();
  if (c_.size() != count) {
    throw std::invalid_argument("TreeCochain: need one tensor per tree");
  }
  for (const DenseTensor& t : c_) {
    if (t.shape() != map_shape(dlg_->dim, degree_)) {
      throw std::invalid_argument("TreeCochain: tensor shape mismatch");
    }
  }
}

TreeCochain TreeCochain::unchecked(DialgebraPtr d, int degree,
                                   std::vector<DenseTensor> per_tree) {
  return TreeCochain(std::move(d), degree, std::move(per_tree));
}

TreeCochain TreeCochain::checked(DialgebraPtr d, int degree,
                                 std::vector<DenseTensor> per_tree) {
  TreeCochain f(std::move(d), degree, std::move(per_tree));
  if (!is_alpha_compatible(f)) {
    throw std::invalid_argument("TreeCochain::checked: not alpha-compatible");
  }
  return f;
}

TreeCochain TreeCochain::zero(DialgebraPtr d, int degree) {
  const int dim = d->dim;
  const size_t count = enumerate_trees(degree).size();
  return TreeCochain(std::move(d), degree,
                     std::vector<DenseTensor>(count, DenseTensor(map_shape(dim, degree))));
}

TreeCochain TreeCochain::identity(DialgebraPtr d) {
  const int dim = d->dim;
  return TreeCochain(std::move(d), 1, {identity_tensor(dim)});
}

const DenseTensor& TreeCochain::at_tree(int tree_idx) const {
  if (tree_idx < 0 || tree_idx >= int(c_.size())) {
    throw std::out_of_range("TreeCochain::at_tree: index");
  }
  return c_[size_t(tree_idx)];
}

const DenseTensor& TreeCochain::at_tree(const Tree& y) const {
  if (y.vertices() != degree_) {
    throw std::invalid_argument("TreeCochain::at_tree: wrong stratum");
  }
  return c_[size_t(tree_index(y))];
}

bool TreeCochain::is_zero() const {
  for (const DenseTensor& t : c_) {
    if (!t.is_zero()) return false;
  }
  return true;
}

TreeCochain& TreeCochain::operator+=(const TreeCochain& o) {
  require_same_dialgebra(*this, o);
  if (degree_ != o.degree_) throw std::invalid_argument("TreeCochain::+=: degree mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TreeCochain& TreeCochain::operator-=(const TreeCochain& o) {
  require_same_dialgebra(*this, o);
  if (degree_ != o.degree_) throw std::invalid_argument("TreeCochain::-=: degree mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TreeCochain& TreeCochain::negate() {
  for (DenseTensor& t : c_) t.negate();
  return *this;
}

TreeCochain& TreeCochain::scale(const Rational& r) {
  for (DenseTensor& t : c_) t.scale(r);
  return *this;
}

bool is_alpha_compatible(const TreeCochain& f) {
  const auto& d = *f.dialgebra();
  for (const DenseTensor& t : f.tensors()) {
    DenseTensor lhs = t.out_apply(d.alpha);
    DenseTensor rhs = t;
    for (int axis = 0; axis + 1 < t.order(); ++axis) rhs = rhs.axis_apply(axis, d.alpha);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

namespace {

TreeCochain pi_unchecked(const DialgebraPtr& d) {
  // Canonical Y_2 order is [12], [21]: the right product rides the left comb.
  return TreeCochain::unchecked(d, 2, {d->right, d->left});
}

}  // namespace

TreeCochain pi_multiplication(const DialgebraPtr& d) {
  const std::vector<Violation> report = validate(*d);
  if (!report.empty()) {
    throw std::invalid_argument("pi_multiplication: invalid dialgebra (" +
                                report.front().detail + ")");
  }
  return pi_unchecked(d);
}

TreeCochain embed_hochschild(const Cochain& f, const DialgebraPtr& diag) {
  const auto& a = *f.algebra();
  if (diag->dim != a.dim || !(diag->left == a.mu) || !(diag->right == a.mu) ||
      !(diag->alpha == a.alpha)) {
    throw std::invalid_argument("embed_hochschild: target is not the diagonal dialgebra");
  }
  const size_t count = enumerate_trees(f.degree()).size();
  return TreeCochain::unchecked(diag, f.degree(),
                                std::vector<DenseTensor>(count, f.coeffs()));
}

TreeCochain partial_composition(const TreeCochain& f, const TreeCochain& g, int i) {
  require_same_dialgebra(f, g);
  const int m = f.degree();
  const int n = g.degree();
  if (i < 1 || i > m) throw std::invalid_argument("partial_composition: slot out of range");
  const auto& d = *f.dialgebra();
  const Matrix spect = alpha_power(d, n - 1);
  const std::vector<int> ns = ones_with(m, i, n);
  const std::vector<Tree>& ys = enumerate_trees(m + n - 1);
  std::vector<DenseTensor> out;
  out.reserve(ys.size());
  for (const Tree& y : ys) {
    DenseTensor ft = f.at_tree(trees::r0(ns, y));
    for (int axis = 0; axis < m; ++axis) {
      if (axis != i - 1) ft = ft.axis_apply(axis, spect);
    }
    out.push_back(compose_slot(ft, g.at_tree(trees::ri(ns, i, y)), i));
  }
  return TreeCochain::unchecked(f.dialgebra(), m + n - 1, std::move(out));
}

TreeCochain gamma_alpha(const TreeCochain& f, std::span<const TreeCochain> gs) {
  const int k = f.degree();
  if (int(gs.size()) != k) {
    throw std::invalid_argument("gamma_alpha: need exactly deg f arguments");
  }
  std::vector<int> ns;
  int total_shift = 0;
  int big = 0;
  for (const TreeCochain& g : gs) {
    require_same_dialgebra(f, g);
    ns.push_back(g.degree());
    total_shift += g.shifted_degree();
    big += g.degree();
  }
  const auto& d = *f.dialgebra();
  const std::vector<Tree>& ys = enumerate_trees(big);
  std::vector<DenseTensor> out;
  out.reserve(ys.size());
  for (const Tree& y : ys) {
    DenseTensor acc = f.at_tree(trees::r0(ns, y));
    for (int i = k; i >= 1; --i) {
      const TreeCochain& g = gs[size_t(i - 1)];
      const Matrix tw = alpha_power(d, total_shift - g.shifted_degree());
      acc = compose_slot(acc, g.at_tree(trees::ri(ns, i, y)).out_apply(tw), i);
    }
    out.push_back(std::move(acc));
  }
  return TreeCochain::unchecked(f.dialgebra(), big, std::move(out));
}

namespace {

bool next_combination(std::vector<int>& p, int m) {
  const int k = int(p.size());
  int i = k - 1;
  while (i >= 0 && p[size_t(i)] == m - (k - 1 - i)) --i;
  if (i < 0) return false;
  ++p[size_t(i)];
  for (int j = i + 1; j < k; ++j) p[size_t(j)] = p[size_t(j - 1)] + 1;
  return true;
}

}  // namespace

TreeCochain brace(const TreeCochain& f, std::span<const TreeCochain> gs) {
  const int m = f.degree();
  const int k = int(gs.size());
  if (k == 0) return f;
  if (k > m) throw std::invalid_argument("brace: more arguments than slots");
  for (const TreeCochain& g : gs) require_same_dialgebra(f, g);

  int result_degree = m - k;
  for (const TreeCochain& g : gs) result_degree += g.degree();
  TreeCochain acc = TreeCochain::zero(f.dialgebra(), result_degree);

  const TreeCochain id = TreeCochain::identity(f.dialgebra());
  std::vector<int> pos(static_cast<size_t>(k));
  for (int q = 0; q < k; ++q) pos[size_t(q)] = q + 1;
  do {
    int eps = 0;
    int earlier = 0;
    for (int q = 0; q < k; ++q) {
      eps += gs[size_t(q)].shifted_degree() * ((pos[size_t(q)] - 1) + earlier);
      earlier += gs[size_t(q)].shifted_degree();
    }
    std::vector<TreeCochain> slots;
    slots.reserve(size_t(m));
    int next = 0;
    for (int s = 1; s <= m; ++s) {
      if (next < k && pos[size_t(next)] == s) {
        slots.push_back(gs[size_t(next)]);
        ++next;
      } else {
        slots.push_back(id);
      }
    }
    TreeCochain term = gamma_alpha(f, slots);
    if (eps % 2 != 0) term.negate();
    acc += term;
  } while (next_combination(pos, m));
  return acc;
}

TreeCochain circle(const TreeCochain& f, const TreeCochain& g) {
  const TreeCochain gs[1] = {g};
  return brace(f, gs);
}

TreeCochain bracket(const TreeCochain& f, const TreeCochain& g) {
  TreeCochain r = circle(f, g);
  TreeCochain s = circle(g, f);
  if ((f.shifted_degree() * g.shifted_degree()) % 2 == 0) {
    r -= s;
  } else {
    r += s;
  }
  return r;
}

TreeCochain dot(const TreeCochain& f, const TreeCochain& g) {
  require_same_dialgebra(f, g);
  const TreeCochain pi = pi_unchecked(f.dialgebra());
  const TreeCochain gs[2] = {f, g};
  TreeCochain r = brace(pi, gs);
  if ((f.shifted_degree() + 1) % 2 != 0) r.negate();
  return r;
}

TreeCochain hochschild_delta(const TreeCochain& f) {
  const auto& d = *f.dialgebra();
  const int n = f.degree();
  const Matrix outer = alpha_power(d, n - 1);
  const std::vector<Tree>& ys = enumerate_trees(n + 1);
  std::vector<DenseTensor> out;
  out.reserve(ys.size());
  for (const Tree& y : ys) {
    // a_1 (bullet_0) f(d_0 y; a_2..a_{n+1}) with the outer alpha padding
    const DenseTensor& p0 = product_tensor(d, trees::bullet(y, 0));
    DenseTensor acc =
        compose_slot(p0.axis_apply(0, outer), f.at_tree(trees::face(y, 0)), 2);

    for (int i = 1; i <= n; ++i) {
      const DenseTensor& pi_prod = product_tensor(d, trees::bullet(y, i));
      DenseTensor ft = f.at_tree(trees::face(y, i));
      for (int axis = 0; axis < n; ++axis) {
        if (axis != i - 1) ft = ft.axis_apply(axis, d.alpha);
      }
      DenseTensor term = compose_slot(ft, pi_prod, i);
      if (i % 2 != 0) term.negate();
      acc += term;
    }

    const DenseTensor& pl = product_tensor(d, trees::bullet(y, n + 1));
    DenseTensor last =
        compose_slot(pl.axis_apply(1, outer), f.at_tree(trees::face(y, n + 1)), 1);
    if ((n + 1) % 2 != 0) last.negate();
    acc += last;

    out.push_back(std::move(acc));
  }
  return TreeCochain::unchecked(f.dialgebra(), n + 1, std::move(out));
}

TreeCochain differential_d(const TreeCochain& f) {
  const TreeCochain pi = pi_unchecked(f.dialgebra());
  TreeCochain r = circle(pi, f);
  TreeCochain s = circle(f, pi);
  if (f.shifted_degree() % 2 == 0) {
    r -= s;
  } else {
    r += s;
  }
  return r;
}

std::vector<DenseTensor> pipi_case_table(const HomDialgebra& d) {
  // Rows in canonical Y_3 order; each is (a ? b) ? alpha(c) - alpha(a) ? (b ? c)
  // with the product pair read off the printed table.
  const auto assoc_like = [&](const DenseTensor& out_l, const DenseTensor& in_l,
                              const DenseTensor& out_r, const DenseTensor& in_r) {
    return compose_slot(out_l.axis_apply(1, d.alpha), in_l, 1) -
           compose_slot(out_r.axis_apply(0, d.alpha), in_r, 2);
  };
  std::vector<DenseTensor> rows;
  rows.push_back(assoc_like(d.right, d.right, d.right, d.right));  // [123]
  rows.push_back(assoc_like(d.left, d.right, d.right, d.left));    // [131]
  rows.push_back(assoc_like(d.right, d.left, d.right, d.right));   // [213]
  rows.push_back(assoc_like(d.left, d.left, d.left, d.right));     // [312]
  rows.push_back(assoc_like(d.left, d.left, d.left, d.left));      // [321]
  return rows;
}

std::vector<DenseTensor> pipi_operadic(const DialgebraPtr& d) {
  const TreeCochain pi = pi_unchecked(d);
  const TreeCochain gs[1] = {pi};
  const TreeCochain pp = brace(pi, gs);
  return pp.tensors();
}

Matrix alpha_constraint_matrix(const HomDialgebra& d, int n) {
  if (n < 1) throw std::invalid_argument("alpha_constraint_matrix: degree must be >= 1");
  const long long per_tree = DenseTensor(map_shape(d.dim, n)).size();
  const long long trees_n = long(enumerate_trees(n).size());
  const long long dim = per_tree * trees_n;
  Matrix m(static_cast<int>(dim), static_cast<int>(dim));
  // Block-diagonal: the single-tree constraint repeated per tree.
  for (long long e = 0; e < per_tree; ++e) {
    DenseTensor unit(map_shape(d.dim, n));
    unit.flat(e) = 1;
    DenseTensor img = unit.out_apply(d.alpha);
    for (int axis = 0; axis < n; ++axis) unit = unit.axis_apply(axis, d.alpha);
    img -= unit;
    for (long long r = 0; r < per_tree; ++r) {
      if (img.flat(r).is_zero()) continue;
      for (long long t = 0; t < trees_n; ++t) {
        m.at(int(t * per_tree + r), int(t * per_tree + e)) = img.flat(r);
      }
    }
  }
  return m;
}

std::vector<Vec> alpha_subspace_basis(const HomDialgebra& d, int n) {
  return kernel_basis(alpha_constraint_matrix(d, n));
}

}  // namespace homalg
