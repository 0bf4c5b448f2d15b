#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "homalg/cochain.hpp"
#include "homalg/tree_cochain.hpp"

namespace homalg {

template <class Elem>
struct CohomologyClass {
  int degree = 0;
  Elem representative;
};

// One graded piece of a complex: a basis of the constraint subspace in flat
// coordinates together with the coboundary out of it, both as elements and as
// a matrix in basis coordinates.
template <class Elem>
struct ComplexSlice {
  int degree = 0;
  std::vector<Elem> basis;
  std::vector<Vec> basis_vecs;
  std::optional<std::vector<Vec>> delta_full;  // coboundary of each basis element
  std::optional<Matrix> delta_matrix;          // both built on demand
  std::optional<SpanChecker> image_span;       // span of delta_full, on demand
};

// Bundles the slices of a cochain complex for degrees 1..max_degree+1 and
// answers the rank/kernel/cohomology questions.  The adapter Cx supplies the
// complex: flat coordinates, the constraint-subspace basis, the coboundary,
// and the products that descend to cohomology.  Slices are filled lazily, so
// instances are cheap until queried and not safe to share across threads.
template <class Cx>
class ComplexTower {
 public:
  using Elem = typename Cx::Elem;
  using Class = CohomologyClass<Elem>;

  ComplexTower(Cx cx, int max_degree) : cx_(std::move(cx)), maxn_(max_degree) {
    if (max_degree < 1) throw std::invalid_argument("ComplexTower: max degree >= 1");
  }

  int max_degree() const { return maxn_; }
  const Cx& complex() const { return cx_; }

  const ComplexSlice<Elem>& slice(int n) {
    require_degree(n, 1, maxn_ + 1);
    auto it = slices_.find(n);
    if (it == slices_.end()) it = slices_.emplace(n, build_slice(n)).first;
    return it->second;
  }

  // Coboundaries of the degree-n basis elements in flat degree-(n+1)
  // coordinates.
  const std::vector<Vec>& delta_full(int n) {
    require_degree(n, 1, maxn_);
    ComplexSlice<Elem>& s = mutable_slice(n);
    if (!s.delta_full) {
      std::vector<Vec> img;
      img.reserve(s.basis.size());
      for (const Elem& b : s.basis) img.push_back(cx_.to_vec(cx_.delta(b)));
      s.delta_full = std::move(img);
    }
    return *s.delta_full;
  }

  // Matrix of the coboundary from degree n in basis coordinates (rows index
  // the degree-(n+1) basis).  Kernel bases carry one designated coordinate per
  // vector (unit there, zero in the others), so coordinates are read off
  // directly; a reconstruction pass guards against values outside the span.
  const Matrix& delta_matrix(int n) {
    require_degree(n, 1, maxn_);
    const std::vector<Vec>& img = delta_full(n);
    ComplexSlice<Elem>& s = mutable_slice(n);
    if (!s.delta_matrix) {
      const std::vector<Vec>& up = slice(n + 1).basis_vecs;
      const std::vector<int> marks = designated_columns(up);
      const int rows = int(up.size());
      const int cols = int(img.size());
      Matrix m(rows, cols);
      for (int t = 0; t < cols; ++t) {
        for (int j = 0; j < rows; ++j) m.at(j, t) = img[t][marks[j]];
      }
      const size_t full = up.empty() ? 0 : up.front().size();
      if (size_t(rows) != full) verify_in_span(up, m, img);
      s.delta_matrix = std::move(m);
    }
    return *s.delta_matrix;
  }

  int cocycle_dimension(int n) {
    require_degree(n, 1, maxn_);
    const Matrix& dm = delta_matrix(n);
    return int(kernel_basis(dm).size());
  }

  int coboundary_rank(int n) {
    require_degree(n, 1, maxn_);
    return rank(delta_matrix(n));
  }

  // dim ker(delta at n) - rank(delta at n-1), the paper's H^n for n >= 2.
  int cohomology_dimension(int n) {
    require_degree(n, 2, maxn_);
    return cocycle_dimension(n) - coboundary_rank(n - 1);
  }

  bool is_cocycle(const Elem& f) { return cx_.delta(f).is_zero(); }

  bool is_coboundary(const Elem& f) {
    const int n = cx_.degree_of(f);
    require_degree(n, 2, maxn_ + 1);
    const std::vector<Vec>& img = delta_full(n - 1);
    ComplexSlice<Elem>& prev = mutable_slice(n - 1);
    if (!prev.image_span) prev.image_span = SpanChecker(img);
    return prev.image_span->contains(cx_.to_vec(f));
  }

  // Representatives of a basis of H^n: kernel vectors of the degree-n matrix
  // that extend the image of the degree-(n-1) matrix to a larger span.
  std::vector<Class> cohomology_basis(int n) {
    require_degree(n, 2, maxn_);
    const Matrix& below = delta_matrix(n - 1);
    std::vector<Vec> image_coords;
    for (int j = 0; j < below.cols(); ++j) image_coords.push_back(below.column(j));
    const std::vector<Vec> kernel = kernel_basis(delta_matrix(n));

    std::vector<Class> out;
    std::vector<Vec> span = image_coords;
    int base_rank = rank(Matrix::from_columns(span));
    for (const Vec& z : kernel) {
      span.push_back(z);
      const int r = rank(Matrix::from_columns(span));
      if (r > base_rank) {
        base_rank = r;
        out.push_back(Class{n, from_basis_coords(n, z)});
      } else {
        span.pop_back();
      }
    }
    return out;
  }

  Class make_class(Elem rep) {
    if (!is_cocycle(rep)) throw std::invalid_argument("make_class: representative not closed");
    return Class{cx_.degree_of(rep), std::move(rep)};
  }

  bool same_class(const Class& x, const Class& y) {
    if (x.degree != y.degree) return false;
    Elem diff = x.representative;
    diff -= y.representative;
    if (diff.is_zero()) return true;
    return is_coboundary(diff);
  }

  bool is_zero_class(const Class& x) {
    if (x.representative.is_zero()) return true;
    return is_coboundary(x.representative);
  }

  Class induced_cup(const Class& x, const Class& y) {
    return Class{x.degree + y.degree, cx_.dot(x.representative, y.representative)};
  }

  Class induced_bracket(const Class& x, const Class& y) {
    return Class{x.degree + y.degree - 1,
                 cx_.bracket(x.representative, y.representative)};
  }

  Elem from_basis_coords(int n, const Vec& coords) {
    const ComplexSlice<Elem>& s = slice(n);
    if (coords.size() != s.basis.size()) {
      throw std::invalid_argument("from_basis_coords: size mismatch");
    }
    Elem out = cx_.zero(n);
    for (size_t j = 0; j < coords.size(); ++j) {
      if (coords[j].is_zero()) continue;
      Elem term = s.basis[j];
      term.scale(coords[j]);
      out += term;
    }
    return out;
  }

 private:
  static void require_degree(int n, int lo, int hi) {
    if (n < lo || n > hi) throw std::invalid_argument("ComplexTower: degree out of range");
  }

  // For each basis vector, the column where it is 1 and every other basis
  // vector is 0 (kernel_basis always provides one: its free columns).
  static std::vector<int> designated_columns(const std::vector<Vec>& basis) {
    const int k = int(basis.size());
    std::vector<int> marks(k, -1);
    if (k == 0) return marks;
    const int dim = int(basis.front().size());
    for (int c = 0; c < dim; ++c) {
      int owner = -1;
      bool clean = true;
      for (int j = 0; j < k && clean; ++j) {
        if (basis[j][c].is_zero()) continue;
        if (owner >= 0 || !(basis[j][c] == Rational(1))) clean = false;
        else owner = j;
      }
      if (clean && owner >= 0 && marks[owner] < 0) marks[owner] = c;
    }
    for (int j = 0; j < k; ++j) {
      if (marks[j] < 0) throw std::logic_error("ComplexTower: basis has no designated columns");
    }
    return marks;
  }

  // Checks that each target equals the combination read off into m; uses the
  // basis vectors' nonzero entries so sparse bases stay cheap.
  static void verify_in_span(const std::vector<Vec>& basis, const Matrix& m,
                             const std::vector<Vec>& targets) {
    std::vector<std::vector<int>> nz(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
      for (size_t c = 0; c < basis[j].size(); ++c) {
        if (!basis[j][c].is_zero()) nz[j].push_back(int(c));
      }
    }
    for (int t = 0; t < int(targets.size()); ++t) {
      Vec r = targets[t];
      for (int j = 0; j < int(basis.size()); ++j) {
        const Rational& coeff = m.at(j, t);
        if (coeff.is_zero()) continue;
        for (int c : nz[j]) r[c] -= coeff * basis[j][c];
      }
      for (const Rational& x : r) {
        if (!x.is_zero()) {
          throw std::logic_error("ComplexTower: coboundary escapes the constraint subspace");
        }
      }
    }
  }

  ComplexSlice<Elem>& mutable_slice(int n) {
    slice(n);
    return slices_.at(n);
  }

  ComplexSlice<Elem> build_slice(int n) {
    ComplexSlice<Elem> s;
    s.degree = n;
    s.basis_vecs = cx_.subspace_basis(n);
    s.basis.reserve(s.basis_vecs.size());
    for (const Vec& v : s.basis_vecs) s.basis.push_back(cx_.from_vec(n, v));
    return s;
  }

  Cx cx_;
  int maxn_;
  std::map<int, ComplexSlice<Elem>> slices_;
};

// Adapter for the hom-associative complex.
struct HomComplex {
  AlgebraPtr a;
  using Elem = Cochain;

  int degree_of(const Elem& f) const { return f.degree(); }
  std::vector<Vec> subspace_basis(int n) const { return alpha_subspace_basis(*a, n); }
  Vec to_vec(const Elem& f) const { return f.coeffs().entries(); }
  Elem from_vec(int n, const Vec& v) const;
  Elem zero(int n) const { return Cochain::zero(a, n); }
  Elem delta(const Elem& f) const { return hochschild_delta(f); }
  Elem dot(const Elem& x, const Elem& y) const { return homalg::dot(x, y); }
  Elem bracket(const Elem& x, const Elem& y) const { return homalg::bracket(x, y); }
};

// Adapter for the tree-indexed dialgebra complex; flat coordinates are the
// per-tree tensors concatenated in canonical tree order.
struct DialgComplex {
  DialgebraPtr d;
  using Elem = TreeCochain;

  int degree_of(const Elem& f) const { return f.degree(); }
  std::vector<Vec> subspace_basis(int n) const { return alpha_subspace_basis(*d, n); }
  Vec to_vec(const Elem& f) const;
  Elem from_vec(int n, const Vec& v) const;
  Elem zero(int n) const { return TreeCochain::zero(d, n); }
  Elem delta(const Elem& f) const { return hochschild_delta(f); }
  Elem dot(const Elem& x, const Elem& y) const { return homalg::dot(x, y); }
  Elem bracket(const Elem& x, const Elem& y) const { return homalg::bracket(x, y); }
};

using HomTower = ComplexTower<HomComplex>;
using DialgTower = ComplexTower<DialgComplex>;

}  // namespace homalg
