#include <doctest.h>

#include <random>

#include "osp12/rational.hpp"

using osp12::Rational;

TEST_CASE("field arithmetic on worked examples") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  // level for (p,q) = (5,1): p/(2q) - 3/2
  CHECK(Rational(5, 2 * 1) - Rational(3, 2) == Rational(1));
  CHECK(Rational(7, 3) * Rational(0) == Rational(0));
  CHECK(Rational(-4, 6) == Rational(-2, 3));
  CHECK((Rational(7, 2) / Rational(7)) == Rational(1, 2));
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("canonical form and serialization") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(6, -4).str() == "-3/2");  // denominator kept positive
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK_THROWS_AS(Rational::parse("junk"), std::invalid_argument);
}

TEST_CASE("ordering and integer access") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5, 2) < Rational(-2));
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(4, 2).to_long() == 2);
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK_THROWS_AS(Rational(1, 2).to_long(), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  auto rnd = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 200; ++i) {
    const Rational a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a / a == Rational(1));
  }
}

TEST_CASE("pow") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-1, 2).pow(2) == Rational(1, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
}
