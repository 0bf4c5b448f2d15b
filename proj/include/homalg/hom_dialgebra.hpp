#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homalg/hom_algebra.hpp"
#include "homalg/trees.hpp"

namespace homalg {

// Two-product analogue of HomAssociativeAlgebra: left/right products stored
// as (d, d, d) structure-constant tensors, alpha in row convention.
struct HomDialgebra {
  int dim = 0;
  DenseTensor left;   // a -| b
  DenseTensor right;  // a |- b
  Matrix alpha;
  std::string name;
};

using DialgebraPtr = std::shared_ptr<const HomDialgebra>;

DialgebraPtr make_dialgebra(int dim, DenseTensor left, DenseTensor right,
                            Matrix alpha, std::string name);

const DenseTensor& product_tensor(const HomDialgebra& d, trees::ProductSymbol s);

// Multiplicativity of alpha over both products plus the five twisted axioms;
// empty result means valid.
std::vector<Violation> validate(const HomDialgebra& d);

Matrix alpha_power(const HomDialgebra& d, int k);

// The dialgebra with both products equal to mu; cochains constant in the tree
// coordinate then recover the hom-associative theory.
DialgebraPtr diagonal_dialgebra(const AlgebraPtr& a);

namespace fixtures {

// d=2 with m -| n = (n_1+n_2) m and m |- n = (m_1+m_2) n, alpha = id.
DialgebraPtr bimodule_maps();

// The same products twisted along the coordinate swap (a valid algebra map
// for these products), products composed with the swap on output.
DialgebraPtr bimodule_maps_swapped();

// Broken on purpose: bimodule_maps with one structure constant bumped so the
// five-axiom check fails.  Negative-control fixture.
DialgebraPtr bimodule_maps_perturbed();

}  // namespace fixtures

}  // namespace homalg
