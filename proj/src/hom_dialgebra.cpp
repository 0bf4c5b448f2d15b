#include "homalg/hom_dialgebra.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace homalg {

DialgebraPtr make_dialgebra(int dim, DenseTensor left, DenseTensor right,
                            Matrix alpha, std::string name) {
  if (dim < 1) throw std::invalid_argument("make_dialgebra: dimension must be >= 1");
  if (left.shape() != map_shape(dim, 2) || right.shape() != map_shape(dim, 2)) {
    throw std::invalid_argument("make_dialgebra: products must have shape (d, d, d)");
  }
  if (alpha.rows() != dim || alpha.cols() != dim) {
    throw std::invalid_argument("make_dialgebra: alpha must be d x d");
  }
  return std::make_shared<const HomDialgebra>(HomDialgebra{
      dim, std::move(left), std::move(right), std::move(alpha), std::move(name)});
}

const DenseTensor& product_tensor(const HomDialgebra& d, trees::ProductSymbol s) {
  return s == trees::ProductSymbol::left ? d.left : d.right;
}

Matrix alpha_power(const HomDialgebra& d, int k) {
  if (k < 0) throw std::invalid_argument("alpha_power: negative power");
  Matrix p = Matrix::identity(d.dim);
  for (int t = 0; t < k; ++t) p = p * d.alpha;
  return p;
}

namespace {

void collect_mismatch(const DenseTensor& lhs, const DenseTensor& rhs, int dim,
                      int args, const std::string& rule, const std::string& law,
                      std::vector<Violation>& out) {
  std::vector<int> idx(size_t(args), 0);
  while (true) {
    bool bad = false;
    std::vector<int> full(idx);
    full.push_back(0);
    for (int o = 0; o < dim && !bad; ++o) {
      full.back() = o;
      bad = lhs.at(full) != rhs.at(full);
    }
    if (bad) {
      std::ostringstream os;
      os << law << " fails at (";
      for (size_t t = 0; t < idx.size(); ++t) {
        os << (t ? "," : "") << 'e' << idx[t] + 1;
      }
      os << ')';
      out.push_back(Violation{rule, idx, os.str()});
    }
    int a = args - 1;
    while (a >= 0 && ++idx[size_t(a)] == dim) {
      idx[size_t(a)] = 0;
      --a;
    }
    if (a < 0) break;
  }
}

}  // namespace

std::vector<Violation> validate(const HomDialgebra& d) {
  std::vector<Violation> out;

  const std::array<std::pair<const DenseTensor*, const char*>, 2> prods = {
      {{&d.left, "left product"}, {&d.right, "right product"}}};
  for (const auto& [p, nm] : prods) {
    collect_mismatch(p->out_apply(d.alpha),
                     p->axis_apply(0, d.alpha).axis_apply(1, d.alpha), d.dim, 2,
                     std::string("multiplicativity (") + nm + ")",
                     std::string("alpha over the ") + nm, out);
  }

  // The five axioms, written as (outer, inner, slot, twisted-slot) pairs:
  // slot 1 composition carries alpha on the outer second slot, and vice versa.
  const auto lhs_of = [&](const DenseTensor& outer, const DenseTensor& inner) {
    // (a ? b) ? alpha(c)
    return compose_slot(outer.axis_apply(1, d.alpha), inner, 1);
  };
  const auto rhs_of = [&](const DenseTensor& outer, const DenseTensor& inner) {
    // alpha(a) ? (b ? c)
    return compose_slot(outer.axis_apply(0, d.alpha), inner, 2);
  };
  struct Axiom {
    const char* name;
    DenseTensor lhs, rhs;
  };
  const std::array<Axiom, 5> axioms = {{
      {"axiom 1: a<(b<c) ~ (a<b)<c", lhs_of(d.left, d.left), rhs_of(d.left, d.left)},
      {"axiom 2: (a<b)<c ~ a<(b>c)", lhs_of(d.left, d.left), rhs_of(d.left, d.right)},
      {"axiom 3: (a>b)<c ~ a>(b<c)", lhs_of(d.left, d.right), rhs_of(d.right, d.left)},
      {"axiom 4: (a<b)>c ~ a>(b>c)", lhs_of(d.right, d.left), rhs_of(d.right, d.right)},
      {"axiom 5: a>(b>c) ~ (a>b)>c", lhs_of(d.right, d.right), rhs_of(d.right, d.right)},
  }};
  for (const Axiom& ax : axioms) {
    collect_mismatch(ax.lhs, ax.rhs, d.dim, 3, "dialgebra axiom", ax.name, out);
  }
  return out;
}

DialgebraPtr diagonal_dialgebra(const AlgebraPtr& a) {
  return make_dialgebra(a->dim, a->mu, a->mu, a->alpha,
                        a->name.empty() ? "diagonal" : "diag-" + a->name);
}

namespace fixtures {

namespace {

// a -| b = (b_1 + b_2) a and a |- b = (a_1 + a_2) b on d = 2.
std::pair<DenseTensor, DenseTensor> bimodule_products() {
  DenseTensor left(map_shape(2, 2));
  DenseTensor right(map_shape(2, 2));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      left.at(std::array{i, j, i}) += 1;   // e_i -| e_j = e_i
      right.at(std::array{i, j, j}) += 1;  // e_i |- e_j = e_j
    }
  }
  return {std::move(left), std::move(right)};
}

}  // namespace

DialgebraPtr bimodule_maps() {
  auto [left, right] = bimodule_products();
  return make_dialgebra(2, std::move(left), std::move(right),
                        Matrix::identity(2), "dial-bimod");
}

DialgebraPtr bimodule_maps_swapped() {
  auto [left, right] = bimodule_products();
  Matrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  return make_dialgebra(2, left.out_apply(swap), right.out_apply(swap), swap,
                        "dial-bimod-swap");
}

DialgebraPtr bimodule_maps_perturbed() {
  auto [left, right] = bimodule_products();
  right.at(std::array{1, 1, 0}) += 1;  // e2 |- e2 = e1 + e2 breaks the axioms
  return make_dialgebra(2, std::move(left), std::move(right),
                        Matrix::identity(2), "dial-bimod-perturbed");
}

}  // namespace fixtures

}  // namespace homalg
