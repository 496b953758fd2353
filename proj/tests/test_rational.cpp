#include "ncsf/error.hpp"
#include "ncsf/rational.hpp"

#include <doctest.h>

#include <sstream>

using ncsf::Rational;

TEST_CASE("rational: lowest terms and canonical text") {
  REQUIRE(Rational(6, 4).str() == "3/2");
  REQUIRE(Rational(-6, 4).str() == "-3/2");
  REQUIRE(Rational(6, -4).str() == "-3/2");
  REQUIRE(Rational(0, 7).str() == "0");
  REQUIRE(Rational(8, 4).str() == "2");
  REQUIRE(Rational(0, 5).denominator() == 1);
  REQUIRE(Rational(3, -9).denominator() == 3);
}

TEST_CASE("rational: zero denominator is a domain error") {
  REQUIRE_THROWS_AS(Rational(1, 0), ncsf::DomainError);
  REQUIRE_THROWS_AS(Rational(1) / Rational(0), ncsf::DomainError);
  REQUIRE_THROWS_AS(Rational(0).inverse(), ncsf::DomainError);
}

TEST_CASE("rational: parse") {
  REQUIRE(Rational::parse("7") == Rational(7));
  REQUIRE(Rational::parse("-3/6") == Rational(-1, 2));
  REQUIRE_THROWS_AS(Rational::parse("1/0"), ncsf::DomainError);
  REQUIRE_THROWS_AS(Rational::parse("x"), ncsf::DomainError);
  REQUIRE_THROWS_AS(Rational::parse(""), ncsf::DomainError);
}

TEST_CASE("rational: field axioms on a sample grid") {
  for (long a = -4; a <= 4; ++a) {
    for (long b = 1; b <= 4; ++b) {
      const Rational x(a, b);
      const Rational y(b - 2, a == 0 ? 3 : a);
      const Rational z(a + b, 5);
      REQUIRE(x + y == y + x);
      REQUIRE(x * y == y * x);
      REQUIRE((x + y) + z == x + (y + z));
      REQUIRE(x * (y + z) == x * y + x * z);
      REQUIRE(x - x == Rational(0));
      if (!x.is_zero()) {
        REQUIRE(x * x.inverse() == Rational(1));
      }
    }
  }
}

TEST_CASE("rational: add_product and ordering") {
  Rational acc(1, 2);
  acc.add_product(Rational(1, 3), Rational(3, 2));
  REQUIRE(acc == Rational(1));
  REQUIRE(Rational(-1, 2) < Rational(1, 3));
  REQUIRE(Rational(5, 3) > Rational(3, 2));
  std::ostringstream os;
  os << Rational(-2, 6);
  REQUIRE(os.str() == "-1/3");
}

TEST_CASE("rational: large values stay exact") {
  Rational x(1);
  for (int i = 0; i < 40; ++i) {
    x *= Rational(1000000007);
  }
  for (int i = 0; i < 40; ++i) {
    x /= Rational(1000000007);
  }
  REQUIRE(x.is_one());
}

TEST_CASE("binomial uses the zero convention") {
  REQUIRE(ncsf::binomial(5, 2) == Rational(10));
  REQUIRE(ncsf::binomial(5, 0) == Rational(1));
  REQUIRE(ncsf::binomial(5, 6) == Rational(0));
  REQUIRE(ncsf::binomial(5, -1) == Rational(0));
  REQUIRE(ncsf::binomial(0, 0) == Rational(1));
  REQUIRE(ncsf::binomial(-1, 2) == Rational(0));
  REQUIRE(ncsf::factorial(6) == Rational(720));
  REQUIRE(ncsf::sign_power(3) == Rational(-1));
  REQUIRE(ncsf::sign_power(-2) == Rational(1));
}
