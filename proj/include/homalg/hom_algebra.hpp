#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homalg/tensor.hpp"

namespace homalg {

// One broken structure law, with the basis indices that witness it.
struct Violation {
  std::string rule;
  std::vector<int> indices;
  std::string detail;
};

// Finite-dimensional algebra (A, mu, alpha) over Q given by structure
// constants: mu has shape (d, d, d) with entry (i, j, k) the e_k coefficient
// of e_i * e_j, and alpha is stored in row convention (row i holds the
// coordinates of alpha(e_i)).  Instances are immutable once built; validity
// is checked separately so invalid inputs can be inspected.
struct HomAssociativeAlgebra {
  int dim = 0;
  DenseTensor mu;
  Matrix alpha;
  std::string name;
};

using AlgebraPtr = std::shared_ptr<const HomAssociativeAlgebra>;

AlgebraPtr make_algebra(int dim, DenseTensor mu, Matrix alpha, std::string name);

// Checks that alpha respects the product and that the alpha-twisted
// associativity law holds; empty result means valid.
std::vector<Violation> validate(const HomAssociativeAlgebra& a);

Matrix alpha_power(const HomAssociativeAlgebra& a, int k);

namespace fixtures {

// 1-dimensional: the ground field with alpha = id.
AlgebraPtr ground_field();

// 2-dimensional: unit e1, nilpotent e2 with e2*e2 = 0, alpha = id.
AlgebraPtr dual_numbers();

// Twist of dual_numbers along its algebra map diag(1, lambda).
AlgebraPtr dual_numbers_twisted(const Rational& lambda);

// 3-dimensional truncated polynomials x^3 = 0, alpha = id.
AlgebraPtr truncated_poly();

// Twist of truncated_poly along diag(1, lambda, lambda^2).
AlgebraPtr truncated_poly_twisted(const Rational& lambda);

// Deliberately broken: dual numbers with e2*e2 = e1, which fails the twisted
// associativity law.  Negative-control fixture.
AlgebraPtr dual_numbers_perturbed();

}  // namespace fixtures

}  // namespace homalg
