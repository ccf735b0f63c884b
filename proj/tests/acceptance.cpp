// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion 10 shells out to the CLI binary and compares reports
// byte-for-byte against the committed golden files.

#include <sys/wait.h>

#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "covlab/harness.hpp"
#include "covlab/io.hpp"

using namespace covlab;

namespace {

int g_failures = 0;

struct Criterion {
  const char* name;
  double limit_seconds;
  std::string detail;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

template <typename F>
void run(int number, const char* name, double limit_seconds, F body) {
  Criterion c{name, limit_seconds};
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.ok && limit_seconds > 0 && secs > limit_seconds)
    c.require(false, "runtime " + std::to_string(secs) + "s over limit");
  std::printf("criterion %2d (%s): %s (%.1fs)%s%s\n", number, name, c.ok ? "PASS" : "FAIL",
              secs, c.ok ? "" : " -- ", c.ok ? "" : c.detail.c_str());
  if (!c.ok) ++g_failures;
}

mask_t msk(std::initializer_list<int> members) {
  mask_t m = 0;
  for (int i : members) m |= mask_t{1} << i;
  return m;
}

std::vector<SetFamily> all_families(int ground) {
  const int p = 1 << ground;
  std::vector<SetFamily> out;
  for (mask_t pick = 0; pick < (mask_t{1} << p); ++pick) {
    std::vector<mask_t> sets;
    for (int m = 0; m < p; ++m)
      if ((pick >> m) & 1u) sets.push_back(static_cast<mask_t>(m));
    out.push_back(SetFamily::of(ground, std::move(sets)));
  }
  return out;
}

SetFamily singletons(int n) {
  std::vector<mask_t> s;
  for (int i = 0; i < n; ++i) s.push_back(mask_t{1} << i);
  return SetFamily::of(n, std::move(s));
}

std::vector<Topology> small_spaces(int max_points, bool up_to_homeo) {
  std::vector<Topology> out;
  for (int n = 0; n <= max_points; ++n) {
    auto batch = up_to_homeo ? topologies_up_to_homeo(n) : all_topologies(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<SetFamily> ultrafilters(int ground) {
  std::vector<SetFamily> out;
  for (int i = 0; i < ground; ++i) out.push_back(principal_ultrafilter(i, ground));
  return out;
}

bool front_value(const ConditionReport& r) { return r.condition_values.front().second; }

// Nonempty random family; used where a precondition forbids the empty one.
SetFamily nonempty_random_family(int ground, int max_members, std::uint64_t seed) {
  SetFamily f = random_family(ground, max_members, seed);
  if (f.empty()) f = SetFamily::of(ground, {full_mask(ground)});
  return f;
}

// A collection whose members' sets all contain one shared point, which keeps
// every member inside the union of the transversal duals.
FamilyCollection linked_collection(int ground, std::uint64_t seed) {
  Rng rng(seed);
  int p = static_cast<int>(rng.below(ground));
  int count = 1 + static_cast<int>(rng.below(2));
  std::vector<SetFamily> fams;
  for (int t = 0; t < count; ++t) {
    int members = 1 + static_cast<int>(rng.below(2));
    std::vector<mask_t> sets;
    for (int m = 0; m < members; ++m)
      sets.push_back((static_cast<mask_t>(rng.next()) & full_mask(ground)) |
                     (mask_t{1} << p));
    fams.push_back(SetFamily::of(ground, std::move(sets)));
  }
  return FamilyCollection::of(ground, std::move(fams));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  auto homeo3 = small_spaces(3, true);
  auto labeled2 = small_spaces(2, false);

  run(1, "theorem-e equivalence grid", 60, [&](Criterion& c) {
    for (const Topology& x : homeo3)
      for (int a = 0; a <= 2; ++a)
        for (const SetFamily& b : all_families(a)) {
          Budget budget;
          c.require(verify_theorem_e(x, a, b, budget).agree, "theorem-e disagreement");
        }
  });

  run(2, "theorem-r grid and ultrafilter specialization", 60, [&](Criterion& c) {
    for (const Topology& x : homeo3) {
      for (int i = 0; i <= 2; ++i)
        for (const SetFamily& a : all_families(i)) {
          Budget budget;
          c.require(verify_theorem_r(x, i, a, budget).agree, "theorem-r disagreement");
        }
      for (int i = 1; i <= 2; ++i)
        for (const SetFamily& d : ultrafilters(i)) {
          Budget b1, b2, b3;
          ConditionReport r = verify_theorem_r(x, i, d, b1);
          bool direct = check_D_compact(x, d, b2).holds;
          bool covering = check_D_compact_covering(x, d, b3).holds;
          c.require(r.agree && front_value(r) == direct && direct == covering,
                    "ultrafilter report does not reproduce D-compactness");
        }
    }
  });

  run(3, "theorem-eO/rO grid plus random instances", 120, [&](Criterion& c) {
    for (const Topology& x : labeled2)
      for (int a = 0; a <= 2; ++a)
        for (const SetFamily& b : all_families(a))
          for (const SetFamily& f : all_families(x.points)) {
            Budget b1, b2;
            c.require(verify_theorem_eO(x, a, b, f, b1).agree, "theorem-eO disagreement");
            c.require(verify_theorem_rO(x, a, b, f, b2).agree, "theorem-rO disagreement");
          }
    for (std::uint64_t s = 0; s < 300; ++s) {
      Topology x = random_topology(3, s);
      SetFamily b = random_family(2, 3, s + 10'000);
      SetFamily f = random_family(3, 3, s + 20'000);
      Budget b1, b2;
      c.require(verify_theorem_eO(x, 2, b, f, b1).agree, "random theorem-eO disagreement");
      c.require(verify_theorem_rO(x, 2, b, f, b2).agree, "random theorem-rO disagreement");
    }
  });

  run(4, "theorem-eG/eOG/rEE/rEEf suites and G={full} cross-check", 120, [&](Criterion& c) {
    for (std::uint64_t s = 0; s < 200; ++s) {
      Topology x = random_topology(3, s + 1);
      SetFamily b = random_family(2, 3, s + 30'000);
      SetFamily g = nonempty_random_family(2, 3, s + 40'000);
      SetFamily f = random_family(3, 3, s + 50'000);
      FamilyCollection gcal = linked_collection(2, s + 60'000);
      Budget b1, b2, b3, b4;
      c.require(verify_theorem_eG(x, 2, b, g, b1).agree, "theorem-eG disagreement");
      c.require(verify_theorem_eOG(x, 2, b, g, f, b2).agree, "theorem-eOG disagreement");
      c.require(verify_theorem_rEE(x, 2, gcal, b3).agree, "theorem-rEE disagreement");
      c.require(verify_theorem_rEEf(x, 2, gcal, f, b4).agree, "theorem-rEEf disagreement");
    }
    SetFamily gfull = SetFamily::of(2, {msk({0, 1})});
    for (const Topology& x : labeled2)
      for (const SetFamily& b : all_families(2)) {
        Budget b1, b2, b3, b4;
        ConditionReport eg = verify_theorem_eG(x, 2, b, gfull, b1);
        ConditionReport e = verify_theorem_e(x, 2, b, b2);
        c.require(eg.agree && e.agree && front_value(eg) == front_value(e),
                  "eG with G={full} differs from theorem-e");
        SetFamily f = singletons(x.points);
        ConditionReport eog = verify_theorem_eOG(x, 2, b, gfull, f, b3);
        ConditionReport eo = verify_theorem_eO(x, 2, b, f, b4);
        c.require(eog.agree && eo.agree && front_value(eog) == front_value(eo),
                  "eOG with G={full} differs from theorem-eO");
      }
  });

  run(5, "duality laws over all families on ground <= 3", 10, [&](Criterion& c) {
    for (int n = 0; n <= 3; ++n)
      for (const SetFamily& e : all_families(n)) {
        SetFamily d = transversal_dual(e);
        SetFamily dd = transversal_dual(d);
        c.require(is_upward_closed(d), "dual not upward closed");
        c.require(dd == upward_closure(e), "double dual differs from upward closure");
        c.require((dd == e) == is_upward_closed(e), "double-dual fixpoint mismatch");
        c.require(is_ultrafilter(e) == (!e.empty() && d == e && is_filter(e)),
                  "ultrafilter self-duality mismatch");
      }
  });

  run(6, "counterexample space constructions", 30, [&](Criterion& c) {
    bool saw_t0_not_t1 = false;
    for (int a = 1; a <= 3; ++a) {
      std::vector<mask_t> pool;
      for (mask_t m = 0; m < (mask_t{1} << a); ++m)
        if (m != full_mask(a)) pool.push_back(m);
      const int pn = static_cast<int>(pool.size());
      for (mask_t pick = 1; pick < (mask_t{1} << pn); ++pick) {
        if (std::popcount(pick) > 6) continue;
        std::vector<mask_t> sets;
        for (int i = 0; i < pn; ++i)
          if ((pick >> i) & 1u) sets.push_back(pool[i]);
        SetFamily b = SetFamily::of(a, std::move(sets));
        Topology ta = example_space_a(a, b);
        Topology tb = example_space_b(a, b);
        SubsetSequence w = example_space_witness(a, b);
        Budget b1, b2;
        c.require(!check_BA_compact(ta, a, b, b1).holds, "example_space_a is compact");
        c.require(!check_BA_compact(tb, a, b, b2).holds, "example_space_b is compact");
        c.require(is_violating_cover(ta, b, w), "witness invalid on example_space_a");
        c.require(is_violating_cover(tb, b, w), "witness invalid on example_space_b");
        c.require(is_T0(ta), "example_space_a not T0");
        saw_t0_not_t1 = saw_t0_not_t1 || (is_T0(ta) && !is_T1(ta));
      }
    }
    c.require(saw_t0_not_t1, "no T0-but-not-T1 instance found");
  });

  run(7, "monotonicity facts and downward-closure invariance", 60, [&](Criterion& c) {
    for (const Topology& x : labeled2)
      for (int a = 0; a <= 2; ++a)
        for (const SetFamily& b : all_families(a)) {
          Budget budget;
          c.require(verify_facts(x, a, b, budget).agree, "monotonicity fact violated");
        }
  });

  run(8, "cross-path oracle agreement", 120, [&](Criterion& c) {
    for (const Topology& x : labeled2) {
      for (int a = 0; a <= 2; ++a)
        for (const SetFamily& b : all_families(a)) {
          Budget b1, b2;
          c.require(check_BA_compact(x, a, b, b1).holds ==
                        check_BA_compact_closed(x, a, b, b2).holds,
                    "BA open/closed paths disagree");
          for (const SetFamily& f : all_families(x.points)) {
            Budget b3, b4;
            c.require(check_F_BA_compact(x, a, b, f, b3).holds ==
                          check_F_BA_compact_closed(x, a, b, f, b4).holds,
                      "F-BA open/closed paths disagree");
          }
          for (const SetFamily& g : all_families(a)) {
            Budget b5, b6;
            c.require(check_BG_compact(x, a, b, g, b5).holds ==
                          check_BG_compact_closed(x, a, b, g, b6).holds,
                      "BG open/closed paths disagree");
            for (const SetFamily& f : all_families(x.points)) {
              Budget b7, b8;
              c.require(check_F_BG_compact(x, a, b, g, f, b7).holds ==
                            check_F_BG_compact_closed(x, a, b, g, f, b8).holds,
                        "F-BG open/closed paths disagree");
            }
          }
        }
      for (int i = 1; i <= 2; ++i)
        for (const SetFamily& d : ultrafilters(i)) {
          Budget b1, b2;
          c.require(check_D_compact(x, d, b1).holds ==
                        check_D_compact_covering(x, d, b2).holds,
                    "D-compact paths disagree");
        }
      auto us = ultrafilters(2);
      for (mask_t pick = 1; pick < 4; ++pick) {
        std::vector<SetFamily> members;
        for (int i = 0; i < 2; ++i)
          if ((pick >> i) & 1u) members.push_back(us[i]);
        FamilyCollection m = FamilyCollection::of(2, std::move(members));
        Budget b1, b2, b3, b4;
        c.require(check_weak_M_compact(x, m, b1).holds ==
                      check_weak_M_compact_covering(x, m, b2).holds,
                  "weak-M paths disagree");
        c.require(check_quasi_M_compact(x, m, b3).holds ==
                      check_quasi_M_compact_covering(x, m, b4).holds,
                  "quasi-M paths disagree");
      }
    }
    for (std::uint64_t s = 0; s < 500; ++s) {
      Topology x = random_topology(3, s + 2);
      SetFamily b = random_family(2, 3, s + 70'000);
      SetFamily g = random_family(2, 3, s + 80'000);
      SetFamily f = random_family(3, 3, s + 90'000);
      Budget b1, b2, b3, b4, b5, b6, b7, b8;
      c.require(check_BA_compact(x, 2, b, b1).holds ==
                    check_BA_compact_closed(x, 2, b, b2).holds,
                "random BA paths disagree");
      c.require(check_F_BA_compact(x, 2, b, f, b3).holds ==
                    check_F_BA_compact_closed(x, 2, b, f, b4).holds,
                "random F-BA paths disagree");
      c.require(check_BG_compact(x, 2, b, g, b5).holds ==
                    check_BG_compact_closed(x, 2, b, g, b6).holds,
                "random BG paths disagree");
      c.require(check_F_BG_compact(x, 2, b, g, f, b7).holds ==
                    check_F_BG_compact_closed(x, 2, b, g, f, b8).holds,
                "random F-BG paths disagree");
      SetFamily d = principal_ultrafilter(static_cast<int>(s % 2), 2);
      Budget b9, b10;
      c.require(check_D_compact(x, d, b9).holds ==
                    check_D_compact_covering(x, d, b10).holds,
                "random D paths disagree");
    }
  });

  run(9, "filter reduction and singleton-F reductions", 30, [&](Criterion& c) {
    // I starts at 1: no filter exists on an empty index set, so E = P(empty)
    // has no filter representation and the reduction only applies for I >= 1.
    for (const Topology& x : labeled2) {
      for (int i = 1; i <= 2; ++i) {
        std::vector<SetFamily> upsets;
        for (const SetFamily& e : all_families(i))
          if (is_upward_closed(e)) upsets.push_back(e);
        const int un = static_cast<int>(upsets.size());
        for (mask_t pick = 0; pick < (mask_t{1} << un); ++pick) {
          std::vector<SetFamily> members;
          for (int k = 0; k < un; ++k)
            if ((pick >> k) & 1u) members.push_back(upsets[k]);
          FamilyCollection calE = FamilyCollection::of(i, std::move(members));
          Budget b1, b2;
          c.require(check_calE_accumulation(x, i, calE, std::nullopt, b1).holds ==
                        check_calE_accumulation(x, i, filters_within(calE), std::nullopt,
                                                b2).holds,
                    "filter reduction changed the verdict");
        }
      }
      SetFamily f = singletons(x.points);
      for (int a = 0; a <= 2; ++a)
        for (const SetFamily& b : all_families(a)) {
          Budget b1, b2, b3, b4, b5, b6;
          c.require(check_F_BA_compact(x, a, b, f, b1).holds ==
                        check_BA_compact(x, a, b, b2).holds,
                    "singleton F-BA reduction failed");
          c.require(check_F_E_accumulation(x, a, b, f, b3).holds ==
                        check_E_accumulation_property(x, a, b, b4).holds,
                    "singleton F-E-accumulation reduction failed");
          c.require(check_F_BG_compact(x, a, b, b, f, b5).holds ==
                        check_BG_compact(x, a, b, b, b6).holds,
                    "singleton F-BG reduction failed");
        }
      for (const SetFamily& e : all_families(2)) {
        FamilyCollection calE = FamilyCollection::of(2, {e});
        Budget b1, b2;
        c.require(check_calE_accumulation(x, 2, calE, f, b1).holds ==
                      check_calE_accumulation(x, 2, calE, std::nullopt, b2).holds,
                  "singleton calE reduction failed");
      }
    }
  });

  run(10, "CLI golden files", 0, [&](Criterion& c) {
    struct GoldenCase {
      const char* name;  // golden pair: <name>.args holds argv, <name>.out the report
      int exit_code;
    };
    const GoldenCase cases[] = {
        {"check-compact-holds", 0},  {"check-compact-fails", 1},
        {"check-accum-fails", 1},    {"dual-ultrafilter", 0},
        {"closure-down", 0},         {"build-example-a", 0},
        {"verify-theorem-e", 0},     {"fuzz-small", 0},
        {"validation-error", 2},     {"budget-exceeded", 3},
    };
    const std::string dir = GOLDEN_DIR;
    for (const GoldenCase& g : cases) {
      std::string args = slurp(dir + "/" + g.name + ".args");
      if (!args.empty() && args.back() == '\n') args.pop_back();
      std::string expected = slurp(dir + "/" + g.name + ".out");
      c.require(!expected.empty(), std::string(g.name) + ": golden report missing");
      std::string out_path = dir + "/../.golden_actual_" + g.name;
      std::string cmd = "cd " + dir + " && " + std::string(CLI_PATH) + " " + args + " > " +
                        out_path + " 2>&1";
      int rc = std::system(cmd.c_str());
      int code = rc == -1 ? -1 : WEXITSTATUS(rc);
      c.require(code == g.exit_code,
                std::string(g.name) + ": exit " + std::to_string(code) + " expected " +
                    std::to_string(g.exit_code));
      std::string actual = slurp(out_path);
      c.require(actual == expected, std::string(g.name) + ": report differs from golden");
      std::remove(out_path.c_str());
    }
  });

  if (g_failures) {
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
