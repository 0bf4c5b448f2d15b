#include "homalg/tensor.hpp"

#include <stdexcept>
#include <utility>

namespace homalg {

DenseTensor::DenseTensor(std::vector<int> shape) : shape_(std::move(shape)) {
  long long n = 1;
  strides_.assign(shape_.size(), 1);
  for (int a = int(shape_.size()) - 1; a >= 0; --a) {
    if (shape_[a] <= 0) throw std::invalid_argument("DenseTensor: nonpositive extent");
    strides_[a] = n;
    n *= shape_[a];
  }
  data_.assign(size_t(n), Rational());
}

Rational& DenseTensor::at(std::span<const int> idx) {
  return const_cast<Rational&>(std::as_const(*this).at(idx));
}

const Rational& DenseTensor::at(std::span<const int> idx) const {
  if (idx.size() != shape_.size()) throw std::invalid_argument("DenseTensor::at: order mismatch");
  long long f = 0;
  for (size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] < 0 || idx[a] >= shape_[a]) throw std::out_of_range("DenseTensor::at: index");
    f += strides_[a] * idx[a];
  }
  return data_[size_t(f)];
}

DenseTensor DenseTensor::axis_apply(int axis, const Matrix& m) const {
  if (axis < 0 || axis >= order()) throw std::invalid_argument("axis_apply: bad axis");
  const int d = shape_[axis];
  if (m.rows() != d || m.cols() != d) throw std::invalid_argument("axis_apply: shape mismatch");
  if (m.is_identity()) return *this;
  DenseTensor out(shape_);
  const long long stride = strides_[axis];
  const long long block = stride * d;
  const long long outer = size() / block;
  for (long long b = 0; b < outer; ++b) {
    const long long base = b * block;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const Rational& c = m.at(i, j);
        if (c.is_zero()) continue;
        const long long src = base + j * stride;
        const long long dst = base + i * stride;
        for (long long s = 0; s < stride; ++s) {
          const Rational& x = data_[size_t(src + s)];
          if (x.is_zero()) continue;
          out.data_[size_t(dst + s)] += c * x;
        }
      }
    }
  }
  return out;
}

DenseTensor DenseTensor::out_apply(const Matrix& m) const {
  return axis_apply(order() - 1, m.transpose());
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& o) {
  if (shape_ != o.shape_) throw std::invalid_argument("DenseTensor::+=: shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

DenseTensor& DenseTensor::operator-=(const DenseTensor& o) {
  if (shape_ != o.shape_) throw std::invalid_argument("DenseTensor::-=: shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

DenseTensor& DenseTensor::negate() {
  for (auto& x : data_) {
    if (!x.is_zero()) x = -x;
  }
  return *this;
}

DenseTensor& DenseTensor::scale(const Rational& c) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= c;
  }
  return *this;
}

bool DenseTensor::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<int> map_shape(int dim, int arity) {
  return std::vector<int>(size_t(arity) + 1, dim);
}

DenseTensor identity_tensor(int dim) {
  DenseTensor t(map_shape(dim, 1));
  for (int i = 0; i < dim; ++i) {
    const int idx[2] = {i, i};
    t.at(idx) = 1;
  }
  return t;
}

DenseTensor compose_slot(const DenseTensor& f, const DenseTensor& g, int slot) {
  const int m = f.order() - 1;
  const int n = g.order() - 1;
  if (m < 1 || n < 0) throw std::invalid_argument("compose_slot: bad orders");
  if (slot < 1 || slot > m) throw std::invalid_argument("compose_slot: slot out of range");
  const int d = f.shape().back();
  for (const int e : f.shape()) {
    if (e != d) throw std::invalid_argument("compose_slot: nonuniform f");
  }
  for (const int e : g.shape()) {
    if (e != d) throw std::invalid_argument("compose_slot: nonuniform g");
  }

  long long pre_n = 1, post_n = 1, blk_n = 1;
  for (int a = 0; a < slot - 1; ++a) pre_n *= d;
  for (int a = slot; a < m; ++a) post_n *= d;
  for (int a = 0; a < n; ++a) blk_n *= d;

  DenseTensor out(map_shape(d, m + n - 1));
  // f flat: ((pre*d + s)*post_n + post)*d + o ; g flat: blk*d + s ;
  // out flat: ((pre*blk_n + blk)*post_n + post)*d + o.
  for (long long pre = 0; pre < pre_n; ++pre) {
    for (int s = 0; s < d; ++s) {
      const long long f_base = (pre * d + s) * post_n;
      for (long long blk = 0; blk < blk_n; ++blk) {
        const Rational& gc = g.flat(blk * d + s);
        if (gc.is_zero()) continue;
        const long long o_base = (pre * blk_n + blk) * post_n;
        for (long long post = 0; post < post_n; ++post) {
          const long long fb = (f_base + post) * d;
          const long long ob = (o_base + post) * d;
          for (int o = 0; o < d; ++o) {
            const Rational& fc = f.flat(fb + o);
            if (fc.is_zero()) continue;
            out.flat(ob + o) += gc * fc;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace homalg
