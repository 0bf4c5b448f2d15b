#include "homalg/cohomology.hpp"

#include "homalg/trees.hpp"

namespace homalg {

Cochain HomComplex::from_vec(int n, const Vec& v) const {
  DenseTensor t(map_shape(a->dim, n));
  if (static_cast<long long>(v.size()) != t.size()) {
    throw std::invalid_argument("HomComplex::from_vec: size mismatch");
  }
  t.entries() = v;
  return Cochain::unchecked(a, std::move(t));
}

Vec DialgComplex::to_vec(const Elem& f) const {
  Vec out;
  for (const DenseTensor& t : f.tensors()) {
    out.insert(out.end(), t.entries().begin(), t.entries().end());
  }
  return out;
}

TreeCochain DialgComplex::from_vec(int n, const Vec& v) const {
  const int trees_n = int(trees::enumerate_trees(n).size());
  std::vector<DenseTensor> per_tree;
  per_tree.reserve(trees_n);
  size_t pos = 0;
  for (int y = 0; y < trees_n; ++y) {
    DenseTensor t(map_shape(d->dim, n));
    const size_t block = size_t(t.size());
    if (pos + block > v.size()) {
      throw std::invalid_argument("DialgComplex::from_vec: size mismatch");
    }
    t.entries().assign(v.begin() + long(pos), v.begin() + long(pos + block));
    pos += block;
    per_tree.push_back(std::move(t));
  }
  if (pos != v.size()) {
    throw std::invalid_argument("DialgComplex::from_vec: size mismatch");
  }
  return TreeCochain::unchecked(d, n, std::move(per_tree));
}

}  // namespace homalg
