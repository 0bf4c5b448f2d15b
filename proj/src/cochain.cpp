#include "homalg/cochain.hpp"

#include <stdexcept>

namespace homalg {

namespace {

void require_same_algebra(const Cochain& a, const Cochain& b) {
  if (a.algebra() != b.algebra()) {
    throw std::invalid_argument("cochain operation: mixed algebras");
  }
}

// alpha^{x n} precomposition on every input axis.
DenseTensor precompose_all(const DenseTensor& t, const Matrix& alpha) {
  DenseTensor r = t;
  for (int axis = 0; axis + 1 < t.order(); ++axis) r = r.axis_apply(axis, alpha);
  return r;
}

}  // namespace

Cochain::Cochain(AlgebraPtr a, DenseTensor c) : alg_(std::move(a)), c_(std::move(c)) {
  if (!alg_) throw std::invalid_argument("Cochain: null algebra");
  if (c_.order() < 2 || c_.shape() != map_shape(alg_->dim, c_.order() - 1)) {
    throw std::invalid_argument("Cochain: tensor must have shape (d,..,d) with >= 1 input");
  }
}

Cochain Cochain::checked(AlgebraPtr a, DenseTensor coeffs) {
  Cochain f(std::move(a), std::move(coeffs));
  if (!is_alpha_compatible(*f.alg_, f.c_)) {
    throw std::invalid_argument("Cochain::checked: tensor is not alpha-compatible");
  }
  return f;
}

Cochain Cochain::projected(AlgebraPtr a, DenseTensor coeffs) {
  Cochain f(std::move(a), std::move(coeffs));
  const int n = f.degree();
  const std::vector<Vec> basis = alpha_subspace_basis(*f.alg_, n);
  if (basis.empty()) return zero(f.alg_, n);
  const Matrix b = Matrix::from_columns(basis);
  const Matrix bt = b.transpose();
  const auto gram_inv = inverse(bt * b);
  if (!gram_inv) throw std::logic_error("Cochain::projected: degenerate basis");
  Vec v(f.c_.entries().begin(), f.c_.entries().end());
  // Orthogonal projection B (B^T B)^{-1} B^T v onto the compatible subspace.
  Vec w(size_t(bt.rows()), Rational());
  for (int i = 0; i < bt.rows(); ++i) {
    Rational s;
    for (int j = 0; j < bt.cols(); ++j) {
      if (!bt.at(i, j).is_zero() && !v[size_t(j)].is_zero()) s += bt.at(i, j) * v[size_t(j)];
    }
    w[size_t(i)] = s;
  }
  Vec coords(size_t(gram_inv->rows()), Rational());
  for (int i = 0; i < gram_inv->rows(); ++i) {
    Rational s;
    for (int j = 0; j < gram_inv->cols(); ++j) {
      if (!gram_inv->at(i, j).is_zero() && !w[size_t(j)].is_zero()) {
        s += gram_inv->at(i, j) * w[size_t(j)];
      }
    }
    coords[size_t(i)] = s;
  }
  DenseTensor out(map_shape(f.alg_->dim, n));
  for (long long e = 0; e < out.size(); ++e) {
    Rational s;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (!coords[j].is_zero() && !basis[j][size_t(e)].is_zero()) {
        s += coords[j] * basis[j][size_t(e)];
      }
    }
    out.flat(e) = s;
  }
  return Cochain(f.alg_, std::move(out));
}

Cochain Cochain::zero(AlgebraPtr a, int degree) {
  if (degree < 1) throw std::invalid_argument("Cochain::zero: degree must be >= 1");
  const int d = a->dim;
  return Cochain(std::move(a), DenseTensor(map_shape(d, degree)));
}

Cochain Cochain::identity(AlgebraPtr a) {
  const int d = a->dim;
  return Cochain(std::move(a), identity_tensor(d));
}

Cochain Cochain::multiplication(AlgebraPtr a) {
  DenseTensor mu = a->mu;
  return Cochain(std::move(a), std::move(mu));
}

Cochain& Cochain::operator+=(const Cochain& o) {
  require_same_algebra(*this, o);
  c_ += o.c_;
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  require_same_algebra(*this, o);
  c_ -= o.c_;
  return *this;
}

Cochain& Cochain::negate() {
  c_.negate();
  return *this;
}

Cochain& Cochain::scale(const Rational& r) {
  c_.scale(r);
  return *this;
}

bool is_alpha_compatible(const HomAssociativeAlgebra& a, const DenseTensor& f) {
  return f.out_apply(a.alpha) == precompose_all(f, a.alpha);
}

bool is_alpha_compatible(const Cochain& f) {
  return is_alpha_compatible(*f.algebra(), f.coeffs());
}

Matrix alpha_constraint_matrix(const HomAssociativeAlgebra& a, int n) {
  if (n < 1) throw std::invalid_argument("alpha_constraint_matrix: degree must be >= 1");
  const long long dim = DenseTensor(map_shape(a.dim, n)).size();
  Matrix m(static_cast<int>(dim), static_cast<int>(dim));
  // Column e = image of the e-th unit tensor under alpha o (.) - (.) o alpha^{x n}.
  for (long long e = 0; e < dim; ++e) {
    DenseTensor unit(map_shape(a.dim, n));
    unit.flat(e) = 1;
    const DenseTensor img = unit.out_apply(a.alpha) - precompose_all(unit, a.alpha);
    for (long long r = 0; r < dim; ++r) {
      if (!img.flat(r).is_zero()) m.at(int(r), int(e)) = img.flat(r);
    }
  }
  return m;
}

std::vector<Vec> alpha_subspace_basis(const HomAssociativeAlgebra& a, int n) {
  return kernel_basis(alpha_constraint_matrix(a, n));
}

Cochain partial_composition(const Cochain& f, const Cochain& g, int i) {
  require_same_algebra(f, g);
  const int m = f.degree();
  const int n = g.degree();
  if (i < 1 || i > m) throw std::invalid_argument("partial_composition: slot out of range");
  const Matrix spect = alpha_power(*f.algebra(), n - 1);
  DenseTensor ft = f.coeffs();
  for (int axis = 0; axis < m; ++axis) {
    if (axis != i - 1) ft = ft.axis_apply(axis, spect);
  }
  return Cochain::unchecked(f.algebra(), compose_slot(ft, g.coeffs(), i));
}

Cochain gamma_alpha(const Cochain& f, std::span<const Cochain> gs) {
  const int k = f.degree();
  if (int(gs.size()) != k) {
    throw std::invalid_argument("gamma_alpha: need exactly deg f arguments");
  }
  int total_shift = 0;
  for (const Cochain& g : gs) {
    require_same_algebra(f, g);
    total_shift += g.shifted_degree();
  }
  const DenseTensor idt = identity_tensor(f.algebra()->dim);
  DenseTensor acc = f.coeffs();
  // Insert right-to-left so earlier slot indices stay valid; slot i receives
  // alpha^{total - |g_i|} composed onto the output of g_i.
  for (int i = k; i >= 1; --i) {
    const Cochain& g = gs[size_t(i - 1)];
    const Matrix tw = alpha_power(*f.algebra(), total_shift - g.shifted_degree());
    if (tw.is_identity() && g.coeffs() == idt) continue;  // no-op insertion
    acc = compose_slot(acc, g.coeffs().out_apply(tw), i);
  }
  return Cochain::unchecked(f.algebra(), std::move(acc));
}

namespace {

// Enumerates 1 <= p_1 < .. < p_k <= m in lexicographic order.
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

Cochain brace(const Cochain& f, std::span<const Cochain> gs) {
  const int m = f.degree();
  const int k = int(gs.size());
  if (k == 0) return f;  // {f}{} is f by convention
  if (k > m) throw std::invalid_argument("brace: more arguments than slots");
  for (const Cochain& g : gs) require_same_algebra(f, g);

  int result_degree = m - k;
  for (const Cochain& g : gs) result_degree += g.degree();
  Cochain acc = Cochain::zero(f.algebra(), result_degree);

  const Cochain id = Cochain::identity(f.algebra());
  std::vector<int> pos(static_cast<size_t>(k));
  for (int q = 0; q < k; ++q) pos[size_t(q)] = q + 1;
  do {
    // Sign: each g_q counts the shifted inputs in front of its slot, namely
    // its position offset plus the shifted degrees of the earlier inserts.
    int eps = 0;
    int earlier = 0;
    for (int q = 0; q < k; ++q) {
      eps += gs[size_t(q)].shifted_degree() * ((pos[size_t(q)] - 1) + earlier);
      earlier += gs[size_t(q)].shifted_degree();
    }
    std::vector<Cochain> slots;
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
    Cochain term = gamma_alpha(f, slots);
    if (eps % 2 != 0) term.negate();
    acc += term;
  } while (next_combination(pos, m));
  return acc;
}

Cochain circle(const Cochain& f, const Cochain& g) {
  const Cochain gs[1] = {g};
  return brace(f, gs);
}

Cochain bracket(const Cochain& f, const Cochain& g) {
  Cochain r = circle(f, g);
  Cochain s = circle(g, f);
  if ((f.shifted_degree() * g.shifted_degree()) % 2 == 0) {
    r -= s;
  } else {
    r += s;
  }
  return r;
}

Cochain dot(const Cochain& f, const Cochain& g) {
  require_same_algebra(f, g);
  const Cochain mu = Cochain::multiplication(f.algebra());
  const Cochain gs[2] = {f, g};
  Cochain r = brace(mu, gs);
  if ((f.shifted_degree() + 1) % 2 != 0) r.negate();
  return r;
}

Cochain cup(const Cochain& f, const Cochain& g) {
  require_same_algebra(f, g);
  const int m = f.degree();
  const int n = g.degree();
  const auto& alg = *f.algebra();
  const DenseTensor ft = f.coeffs().out_apply(alpha_power(alg, n - 1));
  const DenseTensor gt = g.coeffs().out_apply(alpha_power(alg, m - 1));
  DenseTensor r = compose_slot(alg.mu, ft, 1);
  r = compose_slot(r, gt, m + 1);
  return Cochain::unchecked(f.algebra(), std::move(r));
}

Cochain differential_d(const Cochain& f) {
  const Cochain mu = Cochain::multiplication(f.algebra());
  Cochain r = circle(mu, f);
  Cochain s = circle(f, mu);
  if (f.shifted_degree() % 2 == 0) {
    r -= s;
  } else {
    r += s;
  }
  return r;
}

Cochain hochschild_delta(const Cochain& f) {
  const auto& alg = *f.algebra();
  const int n = f.degree();
  const Matrix outer = alpha_power(alg, n - 1);

  // mu(alpha^{n-1} a_1, f(a_2..a_{n+1}))
  DenseTensor acc = compose_slot(alg.mu.axis_apply(0, outer), f.coeffs(), 2);

  for (int i = 1; i <= n; ++i) {
    // f(alpha a_1, .., mu(a_i, a_{i+1}), .., alpha a_{n+1}), sign (-1)^i
    DenseTensor ft = f.coeffs();
    for (int axis = 0; axis < n; ++axis) {
      if (axis != i - 1) ft = ft.axis_apply(axis, alg.alpha);
    }
    DenseTensor term = compose_slot(ft, alg.mu, i);
    if (i % 2 != 0) term.negate();
    acc += term;
  }

  // mu(f(a_1..a_n), alpha^{n-1} a_{n+1}), sign (-1)^{n+1}
  DenseTensor last = compose_slot(alg.mu.axis_apply(1, outer), f.coeffs(), 1);
  if ((n + 1) % 2 != 0) last.negate();
  acc += last;

  return Cochain::unchecked(f.algebra(), std::move(acc));
}

}  // namespace homalg
