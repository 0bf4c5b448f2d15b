#include "homalg/hom_algebra.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace homalg {

AlgebraPtr make_algebra(int dim, DenseTensor mu, Matrix alpha, std::string name) {
  if (dim < 1) throw std::invalid_argument("make_algebra: dimension must be >= 1");
  if (mu.shape() != map_shape(dim, 2)) {
    throw std::invalid_argument("make_algebra: mu must have shape (d, d, d)");
  }
  if (alpha.rows() != dim || alpha.cols() != dim) {
    throw std::invalid_argument("make_algebra: alpha must be d x d");
  }
  return std::make_shared<const HomAssociativeAlgebra>(
      HomAssociativeAlgebra{dim, std::move(mu), std::move(alpha), std::move(name)});
}

Matrix alpha_power(const HomAssociativeAlgebra& a, int k) {
  if (k < 0) throw std::invalid_argument("alpha_power: negative power");
  Matrix p = Matrix::identity(a.dim);
  for (int t = 0; t < k; ++t) p = p * a.alpha;
  return p;
}

namespace {

std::string coeff_list(const DenseTensor& t, std::span<const int> idx_prefix, int dim) {
  std::ostringstream os;
  os << '(';
  std::vector<int> idx(idx_prefix.begin(), idx_prefix.end());
  idx.push_back(0);
  for (int k = 0; k < dim; ++k) {
    idx.back() = k;
    if (k) os << ", ";
    os << t.at(idx);
  }
  os << ')';
  return os.str();
}

}  // namespace

std::vector<Violation> validate(const HomAssociativeAlgebra& a) {
  std::vector<Violation> out;

  // alpha(e_i * e_j) vs alpha(e_i) * alpha(e_j)
  const DenseTensor lhs_m = a.mu.out_apply(a.alpha);
  const DenseTensor rhs_m = a.mu.axis_apply(0, a.alpha).axis_apply(1, a.alpha);
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      const int idx[2] = {i, j};
      bool bad = false;
      for (int k = 0; k < a.dim && !bad; ++k) {
        const int full[3] = {i, j, k};
        bad = lhs_m.at(full) != rhs_m.at(full);
      }
      if (bad) {
        out.push_back(Violation{
            "multiplicativity",
            {i, j},
            "alpha(e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) +
                ") = " + coeff_list(lhs_m, idx, a.dim) +
                " but alpha(e" + std::to_string(i + 1) + ")*alpha(e" +
                std::to_string(j + 1) + ") = " + coeff_list(rhs_m, idx, a.dim)});
      }
    }
  }

  // alpha(a) * (b * c) vs (a * b) * alpha(c)
  const DenseTensor lhs_h = compose_slot(a.mu.axis_apply(0, a.alpha), a.mu, 2);
  const DenseTensor rhs_h = compose_slot(a.mu.axis_apply(1, a.alpha), a.mu, 1);
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      for (int k = 0; k < a.dim; ++k) {
        const int idx[3] = {i, j, k};
        bool bad = false;
        for (int o = 0; o < a.dim && !bad; ++o) {
          const int full[4] = {i, j, k, o};
          bad = lhs_h.at(full) != rhs_h.at(full);
        }
        if (bad) {
          out.push_back(Violation{
              "twisted associativity",
              {i, j, k},
              "alpha(e" + std::to_string(i + 1) + ")*(e" + std::to_string(j + 1) +
                  "*e" + std::to_string(k + 1) + ") = " + coeff_list(lhs_h, idx, a.dim) +
                  " but (e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) +
                  ")*alpha(e" + std::to_string(k + 1) + ") = " +
                  coeff_list(rhs_h, idx, a.dim)});
        }
      }
    }
  }
  return out;
}

namespace fixtures {

namespace {

DenseTensor dual_mu() {
  DenseTensor mu(map_shape(2, 2));
  mu.at(std::array{0, 0, 0}) = 1;  // e1*e1 = e1
  mu.at(std::array{0, 1, 1}) = 1;  // e1*e2 = e2
  mu.at(std::array{1, 0, 1}) = 1;  // e2*e1 = e2
  return mu;
}

DenseTensor trunc_mu() {
  DenseTensor mu(map_shape(3, 2));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i + j < 3) mu.at(std::array{i, j, i + j}) = 1;  // x^i * x^j
    }
  }
  return mu;
}

AlgebraPtr twist(const AlgebraPtr& a, Matrix alpha, std::string name) {
  // Composing a multiplicative alpha onto the output of mu is the standard
  // way to produce genuinely twisted examples from associative ones.
  DenseTensor mu = a->mu.out_apply(alpha);
  return make_algebra(a->dim, std::move(mu), std::move(alpha), std::move(name));
}

}  // namespace

AlgebraPtr ground_field() {
  DenseTensor mu(map_shape(1, 2));
  mu.at(std::array{0, 0, 0}) = 1;
  return make_algebra(1, std::move(mu), Matrix::identity(1), "field");
}

AlgebraPtr dual_numbers() {
  return make_algebra(2, dual_mu(), Matrix::identity(2), "dual");
}

AlgebraPtr dual_numbers_twisted(const Rational& lambda) {
  return twist(dual_numbers(), Matrix::diagonal({Rational(1), lambda}),
               "dual-twisted(" + lambda.str() + ")");
}

AlgebraPtr truncated_poly() {
  return make_algebra(3, trunc_mu(), Matrix::identity(3), "trunc3");
}

AlgebraPtr truncated_poly_twisted(const Rational& lambda) {
  return twist(truncated_poly(),
               Matrix::diagonal({Rational(1), lambda, lambda * lambda}),
               "trunc3-twisted(" + lambda.str() + ")");
}

AlgebraPtr dual_numbers_perturbed() {
  // e2*e2 = e1 alone would stay associative (it is the Z/2 group algebra);
  // against the scaling map diag(1, 2) it breaks the twisted law, e.g. at
  // (e2, e2, e1): alpha(e2)*(e2*e1) = 2e1 but (e2*e2)*alpha(e1) = e1.
  DenseTensor mu = dual_mu();
  mu.at(std::array{1, 1, 0}) = 1;
  return make_algebra(2, std::move(mu),
                      Matrix::diagonal({Rational(1), Rational(2)}),
                      "dual-perturbed");
}

}  // namespace fixtures

}  // namespace homalg
