#include "homalg/linalg.hpp"

#include <stdexcept>

namespace homalg {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(int(d.size()), int(d.size()));
  for (int i = 0; i < int(d.size()); ++i) m.at(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != m.cols()) {
      throw std::invalid_argument("Matrix::from_rows: ragged rows");
    }
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(int(cols[0].size()), int(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (int(cols[j].size()) != m.rows()) {
      throw std::invalid_argument("Matrix::from_columns: ragged columns");
    }
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Matrix::column(int j) const {
  Vec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix::operator+: shape mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix::operator-: shape mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Vec Matrix::apply_row(const Vec& v) const {
  if (int(v.size()) != rows_) throw std::invalid_argument("Matrix::apply_row: size mismatch");
  Vec r(cols_);
  for (int i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      r[j] += v[i] * at(i, j);
    }
  }
  return r;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int p = -1;
    for (int r = lead; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != lead) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(lead, j));
    }
    const Rational inv = m.at(lead, col).inverse();
    for (int j = col; j < m.cols(); ++j) {
      if (!m.at(lead, j).is_zero()) m.at(lead, j) *= inv;
    }
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const Rational f = m.at(r, col);
      if (f.is_zero()) continue;
      for (int j = col; j < m.cols(); ++j) {
        if (m.at(lead, j).is_zero()) continue;
        m.at(r, j) -= f * m.at(lead, j);
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

int rank(Matrix m) { return int(rref(m).size()); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Matrix r = m;
  const std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
      v[pivots[pr]] = -r.at(int(pr), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  return coords_in_span(basis, {v}).has_value();
}

std::optional<Matrix> coords_in_span(const std::vector<Vec>& basis,
                                     const std::vector<Vec>& targets) {
  const int k = int(basis.size());
  const int t = int(targets.size());
  size_t dim = 0;
  for (const auto& b : basis) dim = std::max(dim, b.size());
  for (const auto& v : targets) dim = std::max(dim, v.size());
  Matrix aug(int(dim), k + t);
  for (int j = 0; j < k; ++j) {
    if (basis[j].size() != dim) throw std::invalid_argument("coords_in_span: ragged basis");
    for (size_t i = 0; i < dim; ++i) aug.at(int(i), j) = basis[j][i];
  }
  for (int j = 0; j < t; ++j) {
    if (targets[j].size() != dim) throw std::invalid_argument("coords_in_span: ragged targets");
    for (size_t i = 0; i < dim; ++i) aug.at(int(i), k + j) = targets[j][i];
  }
  const std::vector<int> pivots = rref(aug);
  // Any pivot in the target block means that target escapes the span.
  for (const int p : pivots) {
    if (p >= k) return std::nullopt;
  }
  Matrix coords(k, t);
  for (size_t pr = 0; pr < pivots.size(); ++pr) {
    for (int j = 0; j < t; ++j) coords.at(pivots[pr], j) = aug.at(int(pr), k + j);
  }
  return coords;
}

SpanChecker::SpanChecker(const std::vector<Vec>& spanning) {
  r_ = Matrix::from_rows(spanning);
  pivots_ = rref(r_);
}

bool SpanChecker::contains(Vec v) const {
  if (pivots_.empty()) {
    for (const Rational& x : v) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  if (int(v.size()) != r_.cols()) throw std::invalid_argument("SpanChecker: size mismatch");
  for (size_t pr = 0; pr < pivots_.size(); ++pr) {
    const int c = pivots_[pr];
    const Rational f = v[size_t(c)];
    if (f.is_zero()) continue;
    for (int j = c; j < r_.cols(); ++j) {
      if (!r_.at(int(pr), j).is_zero()) v[size_t(j)] -= f * r_.at(int(pr), j);
    }
  }
  for (const Rational& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const std::vector<int> pivots = rref(aug);
  if (int(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace homalg
