#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "homalg/linalg.hpp"
#include "homalg/rational.hpp"

namespace homalg {

// Dense coefficient tensor over the rationals, row-major (last axis fastest).
// A k-linear map V^n -> V on a d-dimensional space is stored with shape
// (d, ..., d, d): n input axes followed by one output axis, where
// entry (i_1..i_n, o) is the e_o coefficient of f(e_{i_1}, ..., e_{i_n}).
class DenseTensor {
 public:
  DenseTensor() = default;
  explicit DenseTensor(std::vector<int> shape);

  const std::vector<int>& shape() const { return shape_; }
  int order() const { return int(shape_.size()); }
  long long size() const { return static_cast<long long>(data_.size()); }

  Rational& at(std::span<const int> idx);
  const Rational& at(std::span<const int> idx) const;
  Rational& at(std::initializer_list<int> idx) {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  const Rational& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  Rational& flat(long long i) { return data_[size_t(i)]; }
  const Rational& flat(long long i) const { return data_[size_t(i)]; }

  // Substitutes m along one axis: result[.., i, ..] = sum_j m(i, j) * (*this)[.., j, ..].
  // For an input axis this precomposes that argument slot with the operator
  // whose matrix rows are m(i, .) in the row convention; for the output axis
  // use out_apply instead.
  DenseTensor axis_apply(int axis, const Matrix& m) const;

  // Postcomposes the map with the operator given in row convention
  // (result[.., o] = sum_k (*this)[.., k] * m(k, o)).
  DenseTensor out_apply(const Matrix& m) const;

  DenseTensor& operator+=(const DenseTensor& o);
  DenseTensor& operator-=(const DenseTensor& o);
  DenseTensor& negate();
  DenseTensor& scale(const Rational& c);
  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }

  bool is_zero() const;
  friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }

  const std::vector<Rational>& entries() const { return data_; }
  std::vector<Rational>& entries() { return data_; }

 private:
  std::vector<int> shape_;
  std::vector<long long> strides_;
  std::vector<Rational> data_;
};

// Plugs the n-ary map g into argument slot i (1-based) of the m-ary map f,
// leaving the remaining slots untouched: the result is the (m+n-1)-ary map
// (a_1..a_{m+n-1}) -> f(a_1, .., g(a_i..a_{i+n-1}), .., a_{m+n-1}).
// Both tensors must share the same coefficient dimension d; cost O(d^{m+n+1}).
DenseTensor compose_slot(const DenseTensor& f, const DenseTensor& g, int slot);

// Uniform map-tensor shape (d, ..., d) with `arity` input axes and one output axis.
std::vector<int> map_shape(int dim, int arity);

// The identity map on a d-dimensional space as a 1-ary tensor.
DenseTensor identity_tensor(int dim);

}  // namespace homalg
