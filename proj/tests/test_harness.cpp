#include "doctest.h"

#include "covlab/harness.hpp"
#include "helpers.hpp"

using namespace covlab;
using namespace covlab::testutil;

namespace {

bool all_conditions(const ConditionReport& r, bool value) {
  if (!r.agree) return false;
  for (const auto& [label, v] : r.condition_values)
    if (v != value) return false;
  return true;
}

SetFamily singletons(int n) {
  std::vector<mask_t> s;
  for (int i = 0; i < n; ++i) s.push_back(mask_t{1} << i);
  return SetFamily::of(n, std::move(s));
}

}  // namespace

TEST_CASE("verify_theorem_e on pinned instances") {
  Budget b1;
  ConditionReport r = verify_theorem_e(sierpinski(), 2, fam(2, {{0}}), b1);
  CHECK(r.condition_values.size() == 8);
  CHECK(all_conditions(r, false));
  for (const Topology& x : all_topologies(2)) {
    Budget b2;
    CHECK(all_conditions(verify_theorem_e(x, 1, fam(1, {{0}}), b2), true));
  }
}

TEST_CASE("verify_theorem_r on pinned instances") {
  Budget b1;
  CHECK(all_conditions(verify_theorem_r(discrete(2), 2, SetFamily(2), b1), true));
  // an ultrafilter index family turns the report into the D-compactness equivalence
  SetFamily d = principal_ultrafilter(0, 2);
  for (const Topology& x : all_topologies(2)) {
    Budget b2, b3;
    ConditionReport r = verify_theorem_r(x, 2, d, b2);
    CHECK(r.agree);
    CHECK(r.condition_values.front().second == check_D_compact(x, d, b3).holds);
  }
}

TEST_CASE("singleton F collapses the relativized theorems") {
  for (const Topology& x : all_topologies(2))
    for (const SetFamily& b : all_families(2)) {
      Budget b1, b2, b3, b4;
      ConditionReport eo = verify_theorem_eO(x, 2, b, singletons(x.points), b1);
      ConditionReport e = verify_theorem_e(x, 2, b, b2);
      CHECK(eo.agree);
      CHECK(e.agree);
      CHECK(eo.condition_values.front().second == e.condition_values.front().second);
      ConditionReport ro = verify_theorem_rO(x, 2, b, singletons(x.points), b3);
      ConditionReport r = verify_theorem_r(x, 2, b, b4);
      CHECK(ro.agree);
      CHECK(ro.condition_values.front().second == r.condition_values.front().second);
    }
}

TEST_CASE("G = {full} collapses the G-relative theorems") {
  SetFamily gfull = fam(2, {{0, 1}});
  for (const Topology& x : all_topologies(2))
    for (const SetFamily& b : all_families(2)) {
      Budget b1, b2, b3;
      ConditionReport eg = verify_theorem_eG(x, 2, b, gfull, b1);
      ConditionReport e = verify_theorem_e(x, 2, b, b2);
      CHECK(eg.agree);
      CHECK(eg.condition_values.front().second == e.condition_values.front().second);
      ConditionReport eog = verify_theorem_eOG(x, 2, b, gfull, singletons(x.points), b3);
      CHECK(eog.agree);
      CHECK(eog.condition_values.front().second == e.condition_values.front().second);
    }
}

TEST_CASE("G-relative theorems require a nonempty G") {
  Budget b1, b2, b3;
  CHECK_THROWS_AS(verify_theorem_eG(discrete(2), 2, fam(2, {{0}}), SetFamily(2), b1),
                  PreconditionViolated);
  CHECK_THROWS_AS(verify_theorem_rEE(discrete(2), 2, FamilyCollection(2), b2),
                  PreconditionViolated);
  // K = {empty set} has an empty transversal dual, so K escapes the union
  CHECK_THROWS_AS(verify_theorem_rEE(discrete(2), 2, coll(2, {fam(2, {{}})}), b3),
                  PreconditionViolated);
}

TEST_CASE("principal Gcal reproduces D-compactness") {
  SetFamily d = principal_ultrafilter(0, 2);
  for (const Topology& x : all_topologies(2)) {
    Budget b1, b2;
    ConditionReport r = verify_theorem_rEE(x, 2, coll(2, {d}), b1);
    CHECK(r.agree);
    CHECK(r.condition_values.front().second == check_D_compact(x, d, b2).holds);
  }
}

TEST_CASE("pointwise propositions") {
  Topology s = sierpinski();
  for (int x = 0; x < 2; ++x) {
    ConditionReport c = verify_prop_ae(s, 2, fam(2, {{0, 1}}), PointSequence(2, {x, x}), x);
    CHECK(all_conditions(c, true));
  }
  ConditionReport r = verify_prop_ae(s, 2, fam(2, {{1}}), PointSequence(2, {0, 1}), 1);
  CHECK(all_conditions(r, true));
  for (const Topology& x : all_topologies(2))
    for (const SetFamily& a : all_families(2))
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int p = 0; p < 2; ++p) {
            CHECK(verify_prop_ae(x, 2, a, PointSequence(2, {i, j}), p).agree);
            SubsetSequence ss(2, 2, {static_cast<mask_t>(i + 1), static_cast<mask_t>(j + 1)});
            CHECK(verify_prop_aeO(x, 2, a, ss, p).agree);
          }
}

TEST_CASE("verify_facts") {
  for (const Topology& x : {sierpinski(), discrete(2), indiscrete(2)})
    for (const SetFamily& b : {fam(2, {{0}}), fam(2, {{0, 1}}), SetFamily(2)}) {
      Budget bu;
      CHECK(verify_facts(x, 2, b, bu).agree);
    }
}

TEST_CASE("rng and generators are reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CHECK(random_topology(3, 7) == random_topology(3, 7));
  CHECK(random_family(2, 3, 7) == random_family(2, 3, 7));
  CHECK(random_topology(0, 1).points == 0);
  // every labeled 2-point topology shows up over many seeds
  std::vector<Topology> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    Topology t = random_topology(2, s);
    if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(t);
  }
  CHECK(seen.size() == all_topologies(2).size());
}

TEST_CASE("fuzz_theorems agrees") {
  Budget b1;
  FuzzResult r = fuzz_theorems(11, 40, 3, b1);
  CHECK(r.checked == 40);
  CHECK(r.all_agree);
}

TEST_CASE("find_counterexample") {
  Budget b1, b2, b3, b4;
  CHECK(!find_counterexample("ba-subset-monotone", 100, 3, b1).has_value());
  auto ce = find_counterexample("ba-superset-implies-subset", 100, 3, b2);
  REQUIRE(ce.has_value());
  CHECK(check_BA_compact(ce->X, ce->A_size, ce->B2, b3).holds);
  CHECK(!check_BA_compact(ce->X, ce->A_size, ce->B, b4).holds);
  Budget b5;
  CHECK_THROWS_AS(find_counterexample("no-such-claim", 1, 3, b5), ParseError);
}
