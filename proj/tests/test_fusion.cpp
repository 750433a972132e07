#include <doctest.h>

#include "osp12/fusion.hpp"

using namespace osp12;

TEST_CASE("closed-form window on worked examples") {
  const AdmissiblePair p51{5, 1};
  const auto r = fuse_closed(p51, {3, 0}, {3, 0});
  REQUIRE(r.summands.size() == 2);
  CHECK(r.summands[0] == AdmissibleWeight{1, 0});
  CHECK(r.summands[1] == AdmissibleWeight{3, 0});

  // side condition kills (1,2) x (1,2) for (5,3)
  CHECK(fuse_closed(AdmissiblePair{5, 3}, {1, 2}, {1, 2}).empty());

  // the vacuum is a unit on every pair
  for (const auto& pr : {AdmissiblePair{5, 1}, AdmissiblePair{5, 3}, AdmissiblePair{2, 4}})
    for (const auto& w : enumerate_weights(pr)) {
      CHECK(fuse_closed(pr, {1, 0}, w) == FusionResult{{w}});
      CHECK(fuse_closed(pr, w, {1, 0}) == FusionResult{{w}});
    }
}

TEST_CASE("oracle on worked examples") {
  const AdmissiblePair p51{5, 1};
  // w1 = (3,0), j2 = 1: g_0(1) = 1 != 0 dies; strata 1,2 survive
  const auto r1 = fuse_oracle(p51, {3, 0}, {3, 0});
  REQUIRE(r1.summands.size() == 2);
  CHECK(r1.summands[0].value(p51) == Rational(0));
  CHECK(r1.summands[1].value(p51) == Rational(1));

  // w1 = (3,0), j2 = 0: only g_0(0) = 0 survives, eigenvalue 1
  const auto r2 = fuse_oracle(p51, {3, 0}, {1, 0});
  REQUIRE(r2.summands.size() == 1);
  CHECK(r2.summands[0].value(p51) == Rational(1));

  // (5,3): w1 = (2,1), j2 = -1/3: survivors n = 0, 1 with eigenvalues -2/3, -5/3
  const AdmissiblePair p53{5, 3};
  const auto r3 = fuse_oracle(p53, {2, 1}, {2, 1});
  REQUIRE(r3.summands.size() == 2);
  std::vector<Rational> vals = {r3.summands[0].value(p53), r3.summands[1].value(p53)};
  std::sort(vals.begin(), vals.end());
  CHECK(vals[0] == Rational(-5, 3));
  CHECK(vals[1] == Rational(-2, 3));
}

TEST_CASE("integrable fusion") {
  const auto r1 = integrable_fuse(1, 1, 1);
  REQUIRE(r1.summands.size() == 2);  // j = 2 excluded by 2+2 > 3
  CHECK(r1.summands[0] == AdmissibleWeight{1, 0});
  CHECK(r1.summands[1] == AdmissibleWeight{3, 0});

  CHECK(integrable_fuse(1, 0, 1) == FusionResult{{AdmissibleWeight{3, 0}}});

  const auto r2 = integrable_fuse(2, 1, 1);
  REQUIRE(r2.summands.size() == 3);  // {0, 1, 2}, all pass 2l+1 = 5

  CHECK_THROWS_AS(integrable_fuse(1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(integrable_fuse(0, 0, 0), std::invalid_argument);
}

TEST_CASE("integrable corollary matches the window formula for q = 1") {
  for (long level = 1; level <= 4; ++level) {
    const AdmissiblePair pr{2 * level + 3, 1};
    REQUIRE(validate_pair(pr.p, pr.q).ok());
    for (long j1 = 0; j1 <= level; ++j1)
      for (long j2 = 0; j2 <= level; ++j2) {
        const auto closed = fuse_closed(pr, {2 * j1 + 1, 0}, {2 * j2 + 1, 0});
        CHECK(closed == integrable_fuse(level, j1, j2));
      }
  }
}

TEST_CASE("fusion tables on worked examples") {
  // (5,1): vacuum row/column is the identity; (3,0) x (3,0) = {(1,0),(3,0)}
  const auto t51 = fusion_table(AdmissiblePair{5, 1});
  REQUIRE(t51.weights.size() == 2);
  CHECK(t51.cells[0][1] == FusionResult{{AdmissibleWeight{3, 0}}});
  CHECK(t51.cells[1][1].summands.size() == 2);

  // (3,1): the 1x1 vacuum table
  const auto t31 = fusion_table(AdmissiblePair{3, 1});
  REQUIRE(t31.weights.size() == 1);
  CHECK(t31.cells[0][0] == FusionResult{{AdmissibleWeight{1, 0}}});

  // (2,4): (1,2) x (1,2) vanishes
  const auto t24 = fusion_table(AdmissiblePair{2, 4});
  REQUIRE(t24.weights.size() == 2);
  CHECK(t24.cells[1][1].empty());
}

TEST_CASE("ring checks") {
  const auto r51 = ring_checks(fusion_table(AdmissiblePair{5, 1}));
  CHECK(r51.commutative);
  CHECK(r51.vacuum_unit);
  CHECK(r51.closure);
  CHECK(r51.associative);
  CHECK(r51.associative_asserted);

  const auto r53 = ring_checks(fusion_table(AdmissiblePair{5, 3}));
  CHECK(r53.commutative);
  CHECK(r53.vacuum_unit);
  CHECK(r53.closure);
  CHECK_FALSE(r53.associative_asserted);  // q > 1: measured, not asserted

  const auto r24 = ring_checks(fusion_table(AdmissiblePair{2, 4}));
  CHECK(r24.commutative);
  CHECK(r24.vacuum_unit);
  CHECK(r24.closure);
}

TEST_CASE("closed and oracle agree cellwise on small sweeps") {
  for (const auto& pr : valid_pairs_pq(24)) {
    const auto ws = enumerate_weights(pr);
    for (const auto& w1 : ws) {
      const auto P1 = bimodule_build(pr, w1);
      for (const auto& w2 : ws)
        CHECK(fuse_closed(pr, w1, w2) == fuse_oracle(P1, pr, w1, w2));
    }
  }
}

TEST_CASE("all fusion multiplicities are 1") {
  for (const auto& pr : valid_pairs_pq(30)) {
    const auto ws = enumerate_weights(pr);
    for (const auto& w1 : ws)
      for (const auto& w2 : ws) {
        const auto r = fuse_closed(pr, w1, w2);
        for (std::size_t i = 1; i < r.summands.size(); ++i)
          CHECK_FALSE(r.summands[i - 1] == r.summands[i]);  // sorted, so equal = adjacent
      }
  }
}

TEST_CASE("commutativity of the window formula") {
  for (const auto& pr : {AdmissiblePair{5, 3}, AdmissiblePair{8, 2}, AdmissiblePair{7, 1}}) {
    const auto ws = enumerate_weights(pr);
    for (const auto& w1 : ws)
      for (const auto& w2 : ws) CHECK(fuse_closed(pr, w1, w2) == fuse_closed(pr, w2, w1));
  }
}

TEST_CASE("table output order is independent of the worker count") {
  const auto t1 = fusion_table(AdmissiblePair{5, 3}, 1);
  const auto t4 = fusion_table(AdmissiblePair{5, 3}, 4);
  REQUIRE(t1.weights.size() == t4.weights.size());
  for (std::size_t i = 0; i < t1.weights.size(); ++i)
    for (std::size_t k = 0; k < t1.weights.size(); ++k)
      CHECK(t1.cells[i][k] == t4.cells[i][k]);
}
