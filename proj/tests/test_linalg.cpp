#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "homalg/linalg.hpp"

using homalg::Matrix;
using homalg::Rational;
using homalg::Vec;
using homalg::coords_in_span;
using homalg::in_span;

namespace {

Matrix mat2(long a, long b, long c, long d) {
  Matrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("constructors and accessors") {
  const Matrix id = Matrix::identity(3);
  CHECK(id.rows() == 3);
  CHECK(id.is_identity());
  CHECK_FALSE(id.is_zero());
  CHECK(Matrix(2, 3).is_zero());
  const Matrix d = Matrix::diagonal({Rational(1), Rational(2)});
  CHECK(d.at(1, 1) == Rational(2));
  CHECK(d.at(0, 1) == Rational(0));
  const Matrix r = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
  CHECK(r == mat2(1, 2, 3, 4));
  CHECK(Matrix::from_columns({{Rational(1), Rational(3)}, {Rational(2), Rational(4)}}) ==
        mat2(1, 2, 3, 4));
  CHECK(r.transpose() == mat2(1, 3, 2, 4));
  CHECK(r.row(1) == Vec{Rational(3), Rational(4)});
  CHECK(r.column(0) == Vec{Rational(1), Rational(3)});
  CHECK_THROWS_AS(Matrix::from_rows({{Rational(1)}, {Rational(1), Rational(2)}}),
                  std::invalid_argument);
}

TEST_CASE("product and row-vector application") {
  const Matrix a = mat2(1, 2, 3, 4);
  const Matrix b = mat2(0, 1, 1, 0);
  CHECK(a * b == mat2(2, 1, 4, 3));
  CHECK(b * a == mat2(3, 4, 1, 2));
  CHECK(a * Matrix::identity(2) == a);
  CHECK_THROWS_AS(a * Matrix(3, 2), std::invalid_argument);
  // Row convention: v^T M.
  CHECK(a.apply_row({Rational(1), Rational(0)}) == Vec{Rational(1), Rational(2)});
  CHECK(a.apply_row({Rational(0), Rational(1)}) == Vec{Rational(3), Rational(4)});
}

TEST_CASE("rref produces exact pivots without rounding") {
  // Hilbert-style fractions force non-integer elimination steps.
  Matrix m = Matrix::from_rows({{Rational(1), Rational(1, 2), Rational(1, 3)},
                                {Rational(1, 2), Rational(1, 3), Rational(1, 4)},
                                {Rational(1, 3), Rational(1, 4), Rational(1, 5)}});
  const std::vector<int> pivots = rref(m);
  CHECK(pivots == std::vector<int>{0, 1, 2});
  CHECK(m.is_identity());
}

TEST_CASE("rank on dependent rows") {
  const Matrix m = Matrix::from_rows({{Rational(1), Rational(2), Rational(3)},
                                      {Rational(2), Rational(4), Rational(6)},
                                      {Rational(1), Rational(1), Rational(1)}});
  CHECK(rank(m) == 2);
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix::identity(4)) == 4);
}

TEST_CASE("kernel basis spans the null space with unit free slots") {
  // x + y + z = 0 has a 2-dimensional kernel.
  const Matrix m = Matrix::from_rows({{Rational(1), Rational(1), Rational(1)}});
  const std::vector<Vec> basis = kernel_basis(m);
  REQUIRE(basis.size() == 2);
  for (const Vec& v : basis) {
    Rational sum;
    for (const Rational& x : v) sum += x;
    CHECK(sum == Rational(0));
  }
  // Each kernel vector is 1 on its own free column and 0 on the others.
  CHECK(basis[0][1] == Rational(1));
  CHECK(basis[0][2] == Rational(0));
  CHECK(basis[1][1] == Rational(0));
  CHECK(basis[1][2] == Rational(1));
  CHECK(kernel_basis(Matrix::identity(3)).empty());
}

TEST_CASE("span membership and coordinates") {
  const std::vector<Vec> basis = {{Rational(1), Rational(0), Rational(1)},
                                  {Rational(0), Rational(1), Rational(1)}};
  CHECK(in_span(basis, {Rational(2), Rational(3), Rational(5)}));
  CHECK_FALSE(in_span(basis, {Rational(0), Rational(0), Rational(1)}));
  const auto coords = coords_in_span(basis, {{Rational(2), Rational(3), Rational(5)}});
  REQUIRE(coords.has_value());
  CHECK(coords->at(0, 0) == Rational(2));
  CHECK(coords->at(1, 0) == Rational(3));
  CHECK_FALSE(coords_in_span(basis, {{Rational(1), Rational(0), Rational(0)}}).has_value());
  // The zero vector lies in every span, including the empty one.
  CHECK(in_span({}, {Rational(0), Rational(0)}));
}

TEST_CASE("span checker agrees with in_span") {
  const std::vector<Vec> spanning = {{Rational(1), Rational(1), Rational(0)},
                                     {Rational(2), Rational(2), Rational(0)},
                                     {Rational(0), Rational(0), Rational(1)}};
  const homalg::SpanChecker checker(spanning);
  CHECK(checker.rank() == 2);
  CHECK(checker.contains({Rational(3), Rational(3), Rational(7)}));
  CHECK_FALSE(checker.contains({Rational(1), Rational(0), Rational(0)}));
  const homalg::SpanChecker empty_checker{std::vector<Vec>{}};
  CHECK(empty_checker.contains({}));
}

TEST_CASE("inverse by augmented elimination") {
  const Matrix a = mat2(2, 1, 1, 1);
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK((a * *inv).is_identity());
  CHECK((*inv * a).is_identity());
  CHECK(*inv == mat2(1, -1, -1, 2));
  CHECK_FALSE(inverse(mat2(1, 2, 2, 4)).has_value());
  CHECK_THROWS_AS(inverse(Matrix(2, 3)), std::invalid_argument);
}
