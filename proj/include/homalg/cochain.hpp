#pragma once

#include <span>
#include <vector>

#include "homalg/hom_algebra.hpp"

namespace homalg {

// n-cochain on a hom-associative algebra: a multilinear map A^n -> A that
// commutes with the structure map (alpha o f = f o alpha^{x n}).  Degree n is
// the arity; the shifted (brace) degree is n - 1.  Construction goes through
// `checked` (rejects incompatible tensors) or `projected` (averages onto the
// compatible subspace); operation results skip the recheck since compatibility
// is preserved, and the harness re-verifies that closure property wholesale.
class Cochain {
 public:
  static Cochain checked(AlgebraPtr a, DenseTensor coeffs);
  static Cochain projected(AlgebraPtr a, DenseTensor coeffs);
  static Cochain zero(AlgebraPtr a, int degree);
  static Cochain identity(AlgebraPtr a);
  static Cochain multiplication(AlgebraPtr a);  // mu as the canonical 2-cochain

  int degree() const { return c_.order() - 1; }
  int shifted_degree() const { return degree() - 1; }
  const DenseTensor& coeffs() const { return c_; }
  const AlgebraPtr& algebra() const { return alg_; }
  bool is_zero() const { return c_.is_zero(); }

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  Cochain& negate();
  Cochain& scale(const Rational& r);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.c_ == b.c_;
  }

  // Trusted constructor for internal use by the operations below.
  static Cochain unchecked(AlgebraPtr a, DenseTensor coeffs) {
    return Cochain(std::move(a), std::move(coeffs));
  }

 private:
  Cochain(AlgebraPtr a, DenseTensor c);
  AlgebraPtr alg_;
  DenseTensor c_;
};

bool is_alpha_compatible(const HomAssociativeAlgebra& a, const DenseTensor& f);
bool is_alpha_compatible(const Cochain& f);

// Row-convention matrix of the constraint alpha o f - f o alpha^{x n} on the
// full tensor space of degree-n cochains; its kernel is C^n_alpha.
Matrix alpha_constraint_matrix(const HomAssociativeAlgebra& a, int n);

// Basis of the compatible subspace C^n_alpha as flat coefficient vectors.
std::vector<Vec> alpha_subspace_basis(const HomAssociativeAlgebra& a, int n);

// Twisted partial composition f o_i g: g fills slot i while every spectator
// slot of f is precomposed with alpha^{deg g - 1}.
Cochain partial_composition(const Cochain& f, const Cochain& g, int i);

// Twisted operad composition gamma(f; g_1..g_k), k = deg f: slot i takes
// alpha^{e_i} o g_i where e_i is the total shifted degree of the other g's.
Cochain gamma_alpha(const Cochain& f, std::span<const Cochain> gs);

// Brace {f}{g_1..g_k}: signed sum of gamma insertions of the g's into f over
// all position choices, identities elsewhere.  Requires k <= deg f; the empty
// brace {f}{} is f itself.
Cochain brace(const Cochain& f, std::span<const Cochain> gs);

// circle f o g = {f}{g}, the one-argument brace.
Cochain circle(const Cochain& f, const Cochain& g);

// Gerstenhaber-type bracket [f,g] = f o g - (-1)^{|f||g|} g o f.
Cochain bracket(const Cochain& f, const Cochain& g);

// dot product f.g = (-1)^{|f|+1} {mu}{f,g}.
Cochain dot(const Cochain& f, const Cochain& g);

// cup product f u g = mu(alpha^{n-1} f(..), alpha^{m-1} g(..)) for m = deg f,
// n = deg g; related to dot by f.g = (-1)^{mn} (f u g).
Cochain cup(const Cochain& f, const Cochain& g);

// Operadic differential d f = mu o f - (-1)^{|f|} f o mu.
Cochain differential_d(const Cochain& f);

// Coboundary of the twisted Hochschild-type complex, written termwise:
// the outer terms pad with alpha^{n-1}, the interior terms contract adjacent
// arguments through mu while the remaining slots pick up a single alpha.
Cochain hochschild_delta(const Cochain& f);

}  // namespace homalg
