#include <doctest.h>

#include <random>

#include "osp12/poly.hpp"

using osp12::BiPoly;
using osp12::Rational;
using osp12::UniPoly;

namespace {

UniPoly t_pow(int d) { return UniPoly::monomial(d, Rational(1)); }

UniPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  UniPoly p;
  const int d = deg(rng);
  for (int k = 0; k <= d; ++k) p.add(k, Rational(num(rng), den(rng)));
  return p;
}

BiPoly random_bipoly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  BiPoly p;
  for (int i = 0; i < 6; ++i) p.add(deg(rng), deg(rng), Rational(num(rng), den(rng)));
  return p;
}

}  // namespace

TEST_CASE("divmod on worked examples") {
  // (t^2 - t) / (t - 1) = (t, 0)
  const UniPoly a = t_pow(2) - t_pow(1);
  const UniPoly b = UniPoly::linear_root(Rational(1));
  const auto [quot, rem] = UniPoly::divmod(a, b);
  CHECK(quot == t_pow(1));
  CHECK(rem.is_zero());

  // f(t) = t(t-1) for (p,q) = (5,1) vanishes at the admissible weight 1
  const UniPoly f = UniPoly::linear_root(Rational(0)) * UniPoly::linear_root(Rational(1));
  CHECK(f.eval(Rational(1)).is_zero());
  CHECK(f.eval(Rational(1, 2)) == Rational(-1, 4));

  // a / 1 = (a, 0)
  const auto [q1, r1] = UniPoly::divmod(a, UniPoly(Rational(1)));
  CHECK(q1 == a);
  CHECK(r1.is_zero());

  CHECK_THROWS_AS(UniPoly::divmod(a, UniPoly()), std::domain_error);
}

TEST_CASE("divmod round-trips on random pairs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 120; ++i) {
    const UniPoly a = random_poly(rng, 7);
    UniPoly b = random_poly(rng, 4);
    if (b.is_zero()) b = t_pow(1);
    const auto [quot, rem] = UniPoly::divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(13);
  for (int i = 0; i < 80; ++i) {
    const UniPoly a = random_poly(rng, 5), b = random_poly(rng, 5), c = random_poly(rng, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const BiPoly u = random_bipoly(rng, 4), v = random_bipoly(rng, 4), w = random_bipoly(rng, 4);
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * (v + w) == u * v + u * w);
  }
}

TEST_CASE("gcd squarefree detection matches explicit root constructions") {
  // distinct roots -> squarefree
  const UniPoly distinct = UniPoly::linear_root(Rational(0)) *
                           UniPoly::linear_root(Rational(1)) *
                           UniPoly::linear_root(Rational(-1, 2));
  CHECK(distinct.is_squarefree());
  CHECK(UniPoly::gcd(distinct, distinct.derivative()).degree() == 0);

  // repeated root -> not squarefree
  const UniPoly repeated = UniPoly::linear_root(Rational(1)) *
                           UniPoly::linear_root(Rational(1)) *
                           UniPoly::linear_root(Rational(2));
  CHECK_FALSE(repeated.is_squarefree());
  CHECK(UniPoly::gcd(repeated, repeated.derivative()) ==
        UniPoly::linear_root(Rational(1)));
}

TEST_CASE("degree sentinel and string form") {
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly().str() == "0");
  const UniPoly p = t_pow(2) - t_pow(1);
  CHECK(p.str() == "t^2 - t");
  CHECK((Rational(1, 2) * t_pow(1) + UniPoly(Rational(-3))).str() == "1/2*t - 3");
}

TEST_CASE("bivariate partial derivative in t2") {
  CHECK(BiPoly::monomial(0, 2, Rational(1)).d_dt2() == BiPoly::monomial(0, 1, Rational(2)));
  CHECK(BiPoly::monomial(1, 0, Rational(1)).d_dt2().is_zero());
  CHECK(BiPoly::monomial(1, 3, Rational(1)).d_dt2() == BiPoly::monomial(1, 2, Rational(3)));
}

TEST_CASE("t2 strata extraction") {
  BiPoly p;
  p.add(2, 0, Rational(1));
  p.add(1, 1, Rational(-2));
  p.add(0, 1, Rational(1, 2));
  CHECK(p.t2_stratum(0) == t_pow(2));
  CHECK(p.t2_stratum(1) == Rational(-2) * t_pow(1) + UniPoly(Rational(1, 2)));
  CHECK(p.t2_stratum(2).is_zero());
  CHECK(p.degree_t2() == 1);
}
