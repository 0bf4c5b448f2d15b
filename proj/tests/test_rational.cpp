#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "homalg/rational.hpp"

using homalg::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-2, 6) == Rational(-1, 3));
  CHECK(Rational(2, -6) == Rational(-1, 3));  // sign moves to the numerator
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 6).numerator() == 1);
  CHECK(Rational(2, 6).denominator() == 3);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("6/4") == Rational(3, 2));  // canonicalized on entry
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1 / 2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
  const Rational a(1, 2);
  const Rational b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK(a.inverse() == Rational(2));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("results stay canonical after mutation") {
  Rational x(1, 6);
  x += Rational(1, 3);  // 1/6 + 2/6 = 1/2
  CHECK(x.numerator() == 1);
  CHECK(x.denominator() == 2);
  x *= Rational(4);  // 2/1
  CHECK(x.denominator() == 1);
  CHECK(x == Rational(2));
}

TEST_CASE("ordering and printing") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-3, 4).str() == "-3/4");
  std::ostringstream os;
  os << Rational(22, 4);
  CHECK(os.str() == "11/2");
}

TEST_CASE("no silent overflow on large products") {
  // 2^40 squared exceeds 64 bits; GMP keeps it exact.
  Rational big(1LL << 40);
  Rational sq = big * big;
  CHECK(sq / big == big);
  CHECK((sq - sq) == Rational(0));
}
