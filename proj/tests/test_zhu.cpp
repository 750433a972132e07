#include <doctest.h>

#include <random>

#include "osp12/fusion.hpp"
#include "osp12/zhu.hpp"

using namespace osp12;

namespace {

BiPoly rnd_bipoly(std::mt19937& rng, int max1, int max2) {
  std::uniform_int_distribution<int> d1(0, max1), d2(0, max2);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  BiPoly p;
  for (int i = 0; i < 7; ++i) p.add(d1(rng), d2(rng), Rational(num(rng), den(rng)));
  return p;
}

}  // namespace

TEST_CASE("zhu_build moduli") {
  CHECK(zhu_build(AdmissiblePair{5, 1}).modulus.str() == "t^2 - t");
  CHECK(zhu_build(AdmissiblePair{2, 4}).modulus ==
        UniPoly::linear_root(Rational(0)) * UniPoly::linear_root(Rational(-1, 2)));
  CHECK(zhu_build(AdmissiblePair{3, 1}).modulus == UniPoly::monomial(1, Rational(1)));
}

TEST_CASE("zhu_mul in the quotient") {
  const auto A51 = zhu_build(AdmissiblePair{5, 1});
  const UniPoly t = UniPoly::monomial(1, Rational(1));
  CHECK(zhu_mul(A51, t, t) == t);  // t^2 = t mod t(t-1)
  const UniPoly b = UniPoly::monomial(1, Rational(2)) + UniPoly(Rational(1, 2));
  CHECK(zhu_mul(A51, UniPoly(Rational(1)), b) == b);  // 1 is the identity

  const auto A31 = zhu_build(AdmissiblePair{3, 1});
  CHECK(zhu_mul(A31, t, t).is_zero());  // t = 0 in C[t]/<t>

  // associativity and unit on random triples
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> deg(0, 4);
  std::uniform_int_distribution<long> num(-5, 5);
  auto rnd = [&] {
    UniPoly p;
    for (int k = 0; k <= deg(rng); ++k) p.add(k, Rational(num(rng)));
    return p;
  };
  for (int i = 0; i < 40; ++i) {
    const UniPoly a = rnd(), b = rnd(), c = rnd();
    CHECK(zhu_mul(A51, zhu_mul(A51, a, b), c) == zhu_mul(A51, a, zhu_mul(A51, b, c)));
  }
}

TEST_CASE("bimodule reducers on worked examples") {
  const AdmissiblePair p51{5, 1};
  const auto P = bimodule_build(p51, {3, 0});
  REQUIRE(P.strata() == 3);
  CHECK(P.reducers[0] == UniPoly::monomial(1, Rational(1)));         // t1
  CHECK(P.reducers[1] == UniPoly::linear_root(Rational(1)));         // t1 - 1
  CHECK(P.reducers[2] == UniPoly::linear_root(Rational(1)));         // t1 - 1
  CHECK(bimodule_dim(P) == 3);

  // vacuum bimodule: single reducer equal to the vacuum polynomial
  for (const auto& pr : {AdmissiblePair{5, 1}, AdmissiblePair{2, 4}, AdmissiblePair{5, 3}}) {
    const auto V = bimodule_build(pr, {1, 0});
    REQUIRE(V.strata() == 1);
    CHECK(V.reducers[0] == vacuum_polynomial(pr));
    CHECK(bimodule_dim(V) == vacuum_polynomial(pr).degree());
  }
}

TEST_CASE("bimodule dimension equals the fusion summand count") {
  // dim A(L(l,j1)) = sum over w2 of |fuse(w1, w2)|: the strata decompose over
  // the roots of the reducers, which are exactly the admissible j2 values.
  for (const auto& pr : {AdmissiblePair{5, 3}, AdmissiblePair{5, 1}, AdmissiblePair{8, 2}}) {
    for (const auto& w1 : enumerate_weights(pr)) {
      const auto P = bimodule_build(pr, w1);
      long total = 0;
      for (const auto& w2 : enumerate_weights(pr))
        total += static_cast<long>(fuse_closed(pr, w1, w2).summands.size());
      CHECK(bimodule_dim(P) == total);
    }
  }
  // ((5,3),(2,1)): two reducers of degree 3, dimension 6
  const auto P = bimodule_build(AdmissiblePair{5, 3}, {2, 1});
  REQUIRE(P.strata() == 2);
  CHECK(P.reducers[0].degree() == 3);
  CHECK(P.reducers[1].degree() == 3);
  CHECK(bimodule_dim(P) == 6);
}

TEST_CASE("normal form") {
  const auto P = bimodule_build(AdmissiblePair{5, 1}, {3, 0});
  // t2^3 generates the dropped subspace
  CHECK(bimodule_nf(P, BiPoly::monomial(0, 3, Rational(1))).is_zero());
  // t1 t2 = t2 since t1 = 1 mod g_1 = t1 - 1
  CHECK(bimodule_nf(P, BiPoly::monomial(1, 1, Rational(1))) ==
        BiPoly::monomial(0, 1, Rational(1)));
  // idempotence on random elements
  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    const BiPoly v = rnd_bipoly(rng, 5, 5);
    const BiPoly nf = bimodule_nf(P, v);
    CHECK(bimodule_nf(P, nf) == nf);
  }
}

TEST_CASE("generator actions on worked examples") {
  const AdmissiblePair p51{5, 1};
  const auto P = bimodule_build(p51, {3, 0});  // j = 1
  CHECK(P.j == Rational(1));
  // left on 1 -> t1 + j (already normal here: j=1 kills nothing at stratum 0?
  // 1 has t2-degree 0; t1 mod g_0 = t1 mod t1 = 0, so nf(t1 + 1) = 1.
  const BiPoly one(Rational(1));
  CHECK(bimodule_left(P, one) == BiPoly(Rational(1)));
  // right on 1 -> t1, and t1 = 0 mod g_0
  CHECK(bimodule_right(P, one).is_zero());
  // left on t2 has eigenvalue j1 + j2 - n = 1 + 1 - 1 = 1 at t1 = 1
  const BiPoly t2 = BiPoly::monomial(0, 1, Rational(1));
  CHECK(bimodule_left(P, t2) == t2);

  // universal bimodule: no reduction, the displayed operators verbatim
  const auto U = universal_bimodule(p51, Rational(1));
  CHECK(bimodule_left(U, one) ==
        BiPoly::monomial(1, 0, Rational(1)) + BiPoly(Rational(1)));
  CHECK(bimodule_right(U, one) == BiPoly::monomial(1, 0, Rational(1)));
  const BiPoly t22 = BiPoly::monomial(0, 2, Rational(1));
  CHECK(bimodule_left(U, t22) ==
        BiPoly::monomial(1, 2, Rational(1)) - BiPoly::monomial(0, 2, Rational(1)));
}

TEST_CASE("actions are well defined and commute") {
  std::mt19937 rng(29);
  for (const auto& [pr, w] : {std::pair{AdmissiblePair{5, 1}, AdmissibleWeight{3, 0}},
                              std::pair{AdmissiblePair{5, 3}, AdmissibleWeight{4, 1}},
                              std::pair{AdmissiblePair{2, 4}, AdmissibleWeight{1, 2}}}) {
    const auto P = bimodule_build(pr, w);
    for (int i = 0; i < 50; ++i) {
      const BiPoly v = rnd_bipoly(rng, 6, 5);
      // nf-invariance: acting after reduction agrees with acting directly
      CHECK(bimodule_left(P, bimodule_nf(P, v)) == bimodule_left(P, v));
      CHECK(bimodule_right(P, bimodule_nf(P, v)) == bimodule_right(P, v));
      // bimodule axiom
      CHECK(bimodule_left(P, bimodule_right(P, v)) ==
            bimodule_right(P, bimodule_left(P, v)));
    }
  }
}

TEST_CASE("polynomial actions extend the generator actions") {
  const AdmissiblePair pr{5, 3};
  const auto P = bimodule_build(pr, {2, 1});
  const UniPoly t = UniPoly::monomial(1, Rational(1));
  const UniPoly a = t * t + Rational(-1, 2) * t;  // t^2 - t/2
  std::mt19937 rng(31);
  for (int i = 0; i < 20; ++i) {
    const BiPoly v = rnd_bipoly(rng, 4, 3);
    const BiPoly lhs = bimodule_left_poly(P, a, v);
    const BiPoly rhs = bimodule_left(P, bimodule_left(P, v)) -
                       Rational(1, 2) * bimodule_left(P, v);
    CHECK(lhs == bimodule_nf(P, rhs));
    CHECK(bimodule_right_poly(P, a, v) ==
          bimodule_right(P, bimodule_right(P, v)) -
              bimodule_nf(P, Rational(1, 2) * bimodule_right(P, v)));
  }
}

TEST_CASE("vacuum bimodule left and right actions coincide") {
  // In the vacuum stratum n = 0 the derivation term vanishes and j = 0, so
  // left(v) - right(v) = 0.
  const AdmissiblePair pr{5, 3};
  const auto V = bimodule_build(pr, {1, 0});
  std::mt19937 rng(43);
  for (int i = 0; i < 30; ++i) {
    const BiPoly v = rnd_bipoly(rng, 6, 0);
    CHECK(bimodule_left(V, v) == bimodule_right(V, v));
  }
}

TEST_CASE("degenerate reducer wipes its stratum") {
  // No grid weight reaches m = p-1 with s = q-1 (that needs m+s even), so
  // degenerate reducers never arise on-grid; drive the handling with the
  // off-grid corner (7,1) of (8,2), where odd strata get the empty product.
  const AdmissiblePair pr{8, 2};
  const auto P = bimodule_build(pr, {7, 1});
  bool has_degenerate = false;
  for (const auto& g : P.reducers)
    if (g.degree() == 0) has_degenerate = true;
  CHECK(has_degenerate);
  long dim = 0;
  for (const auto& g : P.reducers) dim += g.degree();
  CHECK(bimodule_dim(P) == dim);
  for (long n = 0; n < P.strata(); ++n)
    if (P.reducers[static_cast<std::size_t>(n)].degree() == 0)
      CHECK(bimodule_nf(P, BiPoly::monomial(2, static_cast<int>(n), Rational(1))).is_zero());
}
