#include "doctest.h"

#include "covlab/fintop.hpp"
#include "helpers.hpp"

using namespace covlab;
using namespace covlab::testutil;

TEST_CASE("topology validation") {
  CHECK_THROWS_AS(topo(2, {{}, {0}}), ValidationError);             // full set missing
  CHECK_THROWS_AS(topo(2, {{0}, {0, 1}}), ValidationError);         // empty set missing
  CHECK_THROWS_AS(topo(3, {{}, {0}, {1}, {0, 1, 2}}), ValidationError);  // union missing
  CHECK_THROWS_AS(topo(3, {{}, {0, 1}, {1, 2}, {0, 1, 2}}), ValidationError);
}

TEST_CASE("subbase closure") {
  Topology t = topology_from_subbase(3, fam(3, {{0, 2}, {0, 1}}));
  CHECK(t.opens == fam(3, {{}, {0}, {0, 1}, {0, 2}, {0, 1, 2}}));
  CHECK(topology_from_subbase(2, SetFamily(2)) == indiscrete(2));
}

TEST_CASE("closure and interior") {
  Topology s = sierpinski();
  CHECK(s.closure(msk({0})) == msk({0, 1}));
  CHECK(s.closure(msk({1})) == msk({1}));
  CHECK(s.interior(msk({1})) == 0u);
  CHECK(s.interior(msk({0})) == msk({0}));
  for (mask_t m = 0; m <= s.full(); ++m) {
    CHECK(s.closure(s.closure(m)) == s.closure(m));
    CHECK(s.interior(m) == (~s.closure(~m & s.full()) & s.full()));
  }
}

TEST_CASE("separation axioms") {
  CHECK(is_T0(sierpinski()));
  CHECK(!is_T1(sierpinski()));
  CHECK(is_T1(discrete(3)));
  CHECK(!is_T0(indiscrete(2)));
  // on finite spaces T1 forces discreteness
  for (int n = 0; n <= 3; ++n)
    for (const Topology& t : all_topologies(n)) CHECK(is_T1(t) == (t == discrete(n)));
}

TEST_CASE("topology enumeration counts") {
  CHECK(all_topologies(0).size() == 1);
  CHECK(all_topologies(1).size() == 1);
  CHECK(all_topologies(2).size() == 4);
  CHECK(all_topologies(3).size() == 29);
  CHECK(topologies_up_to_homeo(2).size() == 3);
  CHECK(topologies_up_to_homeo(3).size() == 9);
}

TEST_CASE("restricted cluster points") {
  Topology s = sierpinski();
  DirectedSet chain = DirectedSet::chain(2);
  Subset all(2, msk({0, 1}));
  CHECK(!restricted_cluster_point(s, chain, PointSequence(2, {1, 1}), all, 0));
  CHECK(restricted_cluster_point(s, chain, PointSequence(2, {1, 1}), all, 1));
  CHECK(restricted_cluster_point(s, chain, PointSequence(2, {1, 0}), all, 0));
  // cofinal restriction sets agree with the full one on a chain tail
  Subset tail(2, msk({1}));
  CHECK(restricted_cluster_point(s, chain, PointSequence(2, {0, 1}), tail, 1));
}

TEST_CASE("minimal accumulation family") {
  Topology s = sierpinski();
  PointSequence seq(2, {0, 1});
  CHECK(minimal_accumulation_family(seq, 0, s) == fam(2, {{0}, {0, 1}}));
  CHECK(minimal_accumulation_family(seq, 1, s) == fam(2, {{0, 1}}));
}

TEST_CASE("directed set validation") {
  CHECK_THROWS_AS(DirectedSet(2, {{true, false}, {false, false}}), ValidationError);
  DirectedSet c = DirectedSet::chain(3);
  CHECK(c.leq[0][2]);
  CHECK(!c.leq[2][0]);
}
