#pragma once

#include <optional>
#include <vector>

#include "homalg/rational.hpp"

namespace homalg {

using Vec = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix diagonal(const Vec& d);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec column(int j) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply_row(const Vec& v) const;  // v^T * M (row-vector convention)

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

// In-place reduced row echelon form; returns the pivot column indices in order.
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

// Basis of { x : m x = 0 } from the free columns of the RREF.  Deterministic:
// one vector per free column, ascending, with a 1 in the free slot.
std::vector<Vec> kernel_basis(const Matrix& m);

bool in_span(const std::vector<Vec>& basis, const Vec& v);

// Coordinates of each target in the given (not necessarily independent) basis,
// batched through a single elimination: result column t solves
// sum_j coords(j,t) * basis[j] == targets[t].  nullopt if any target falls
// outside the span.
std::optional<Matrix> coords_in_span(const std::vector<Vec>& basis,
                                     const std::vector<Vec>& targets);

std::optional<Matrix> inverse(const Matrix& m);

// Repeated membership queries against a fixed span: the spanning set is
// row-reduced once, each query then reduces the candidate in O(rank * dim).
class SpanChecker {
 public:
  SpanChecker() = default;
  explicit SpanChecker(const std::vector<Vec>& spanning);
  bool contains(Vec v) const;
  int rank() const { return int(pivots_.size()); }

 private:
  Matrix r_;
  std::vector<int> pivots_;
};

}  // namespace homalg
