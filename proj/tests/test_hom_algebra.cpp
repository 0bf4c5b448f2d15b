#include <array>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "homalg/hom_algebra.hpp"

using namespace homalg;

TEST_CASE("shipped fixtures satisfy both structure laws") {
  const std::vector<AlgebraPtr> good = {
      fixtures::ground_field(),
      fixtures::dual_numbers(),
      fixtures::dual_numbers_twisted(Rational(2)),
      fixtures::dual_numbers_twisted(Rational(5, 3)),
      fixtures::truncated_poly(),
      fixtures::truncated_poly_twisted(Rational(2)),
      fixtures::truncated_poly_twisted(Rational(-1)),
  };
  for (const AlgebraPtr& a : good) {
    CAPTURE(a->name);
    CHECK(validate(*a).empty());
  }
}

TEST_CASE("twisting by the identity scaling changes nothing") {
  const AlgebraPtr plain = fixtures::dual_numbers();
  const AlgebraPtr twisted = fixtures::dual_numbers_twisted(Rational(1));
  CHECK(twisted->mu == plain->mu);
  CHECK(twisted->alpha.is_identity());
}

TEST_CASE("structure constants of the scaled dual numbers") {
  const AlgebraPtr a = fixtures::dual_numbers_twisted(Rational(2));
  CHECK(a->dim == 2);
  CHECK(a->alpha == Matrix::diagonal({Rational(1), Rational(2)}));
  CHECK(a->mu.at({0, 0, 0}) == Rational(1));  // e1*e1 = e1
  CHECK(a->mu.at({0, 1, 1}) == Rational(2));  // e1*e2 = 2e2
  CHECK(a->mu.at({1, 0, 1}) == Rational(2));  // e2*e1 = 2e2
  CHECK(a->mu.at({1, 1, 0}) == Rational(0));  // e2*e2 = 0
  CHECK(a->mu.at({1, 1, 1}) == Rational(0));
}

TEST_CASE("structure constants of the scaled truncated polynomials") {
  const AlgebraPtr a = fixtures::truncated_poly_twisted(Rational(2));
  CHECK(a->dim == 3);
  CHECK(a->alpha == Matrix::diagonal({Rational(1), Rational(2), Rational(4)}));
  // x^i * x^j picks up the scaling of x^{i+j}; degree three and up vanish.
  CHECK(a->mu.at({0, 0, 0}) == Rational(1));
  CHECK(a->mu.at({0, 1, 1}) == Rational(2));
  CHECK(a->mu.at({1, 1, 2}) == Rational(4));
  CHECK(a->mu.at({1, 2, 0}) == Rational(0));
  CHECK(a->mu.at({1, 2, 1}) == Rational(0));
  CHECK(a->mu.at({1, 2, 2}) == Rational(0));
}

TEST_CASE("the perturbed fixture breaks both laws with located witnesses") {
  const AlgebraPtr bad = fixtures::dual_numbers_perturbed();
  const std::vector<Violation> report = validate(*bad);
  REQUIRE_FALSE(report.empty());

  bool saw_mult = false;
  bool saw_assoc = false;
  for (const Violation& v : report) {
    if (v.rule == "multiplicativity" && v.indices == std::vector<int>{1, 1}) {
      saw_mult = true;
      // The narrative names basis vectors one-based.
      CHECK(v.detail.find("e2*e2") != std::string::npos);
    }
    if (v.rule == "twisted associativity" &&
        v.indices == std::vector<int>{1, 1, 0}) {
      saw_assoc = true;
    }
  }
  CHECK(saw_mult);
  CHECK(saw_assoc);
}

TEST_CASE("alpha_power is an exact matrix power") {
  const AlgebraPtr a = fixtures::dual_numbers_twisted(Rational(2));
  CHECK(alpha_power(*a, 0).is_identity());
  CHECK(alpha_power(*a, 1) == a->alpha);
  CHECK(alpha_power(*a, 3) == Matrix::diagonal({Rational(1), Rational(8)}));
  CHECK_THROWS_AS(alpha_power(*a, -1), std::invalid_argument);
  const AlgebraPtr id = fixtures::truncated_poly();
  CHECK(alpha_power(*id, 7).is_identity());
}

TEST_CASE("make_algebra rejects malformed structure data") {
  DenseTensor mu(map_shape(2, 2));
  CHECK_THROWS_AS(make_algebra(0, mu, Matrix::identity(2), "x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(3, mu, Matrix::identity(3), "x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(2, mu, Matrix::identity(3), "x"),
                  std::invalid_argument);
}
