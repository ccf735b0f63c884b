#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "covlab/checkers.hpp"
#include "covlab/constructions.hpp"

namespace covlab {

// Per-theorem report: each numbered condition evaluated independently.
struct ConditionReport {
  std::string theorem_id;
  std::vector<std::pair<std::string, bool>> condition_values;
  bool agree = false;

  void finish() {
    agree = true;
    for (const auto& [label, v] : condition_values)
      if (v != condition_values.front().second) agree = false;
  }
};

// Eight equivalent forms of [B,A]-compactness.
ConditionReport verify_theorem_e(const Topology& X, int A_size, const SetFamily& B,
                                 Budget& budget);

// Four equivalent forms of the E-accumulation property for E = A+.
ConditionReport verify_theorem_r(const Topology& X, int I_size, const SetFamily& A,
                                 Budget& budget);

// Nine equivalent forms of F-[B,A]-compactness, plus the closure-replacement
// variant of condition (1).
ConditionReport verify_theorem_eO(const Topology& X, int A_size, const SetFamily& B,
                                  const SetFamily& F, Budget& budget);

// Four equivalent forms of the F-E-accumulation property for E = A+, plus the
// closure-replacement variant.
ConditionReport verify_theorem_rO(const Topology& X, int I_size, const SetFamily& A,
                                  const SetFamily& F, Budget& budget);

// Five equivalent forms of [B,G]-compactness.
ConditionReport verify_theorem_eG(const Topology& X, int A_size, const SetFamily& B,
                                  const SetFamily& G, Budget& budget);

// Five equivalent forms of F-[B,G]-compactness.
ConditionReport verify_theorem_eOG(const Topology& X, int A_size, const SetFamily& B,
                                   const SetFamily& G, const SetFamily& F, Budget& budget);

// Equivalents of the collection-accumulation property for calE = {K+ : K in
// Gcal}, A = union(calE).  Requires every K to be contained in A.
ConditionReport verify_theorem_rEE(const Topology& X, int I_size,
                                   const FamilyCollection& Gcal, Budget& budget);
ConditionReport verify_theorem_rEEf(const Topology& X, int I_size,
                                    const FamilyCollection& Gcal, const SetFamily& F,
                                    Budget& budget);

// Pointwise equivalences: accumulation point vs closure intersection.
ConditionReport verify_prop_ae(const Topology& X, int I_size, const SetFamily& A,
                               const PointSequence& seq, int x);
ConditionReport verify_prop_aeO(const Topology& X, int I_size, const SetFamily& A,
                                const SubsetSequence& setseq, int x);

// Monotonicity facts (six clauses) plus downward-closure invariance, checked
// against exhaustively enumerated auxiliaries.  The leading "expected"
// condition is constant true, so agree means every clause held.
ConditionReport verify_facts(const Topology& X, int A_size, const SetFamily& B,
                             Budget& budget);

// Deterministic pseudo-random generator (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t m) { return m == 0 ? 0 : next() % m; }

 private:
  std::uint64_t state_;
};

Topology random_topology(int n, std::uint64_t seed);
SetFamily random_family(int ground, int max_members, std::uint64_t seed);
FamilyCollection random_collection(int ground, int max_families, int max_members,
                                   std::uint64_t seed);

// Counterexample search over seeded random instances.  For the ba- claims B
// and B2 are the two cover-selection families (B a subset of B2); for
// bg-implies-ba, B2 holds the constraining family G; for the ultrafilter
// claims M holds the collection and A_size the index-set size.
struct ClaimInstance {
  std::string claim;
  std::uint64_t seed = 0;
  Topology X;
  int A_size = 0;
  SetFamily B;
  SetFamily B2;
  FamilyCollection M;
};

// Seeded sweep running every theorem verifier on random instances.
// Disagreement is a build-breaking bug: the offending instance is returned so
// the driver can serialize it and abort.
struct FuzzResult {
  std::uint64_t checked = 0;
  bool all_agree = true;
  std::uint64_t bad_seed = 0;
  std::string theorem_id;
  Topology X;
  int A_size = 0;
  SetFamily B;   // or A for the accumulation-side theorems
  SetFamily F;
  SetFamily G;
  FamilyCollection Gcal;
};

FuzzResult fuzz_theorems(std::uint64_t seed, std::uint64_t count, int max_points,
                         Budget& budget);

std::vector<std::string> known_claims();

// First seed in [0, seed_count) whose random instance satisfies the claim's
// premise but not its conclusion, or nullopt.
std::optional<ClaimInstance> find_counterexample(const std::string& claim,
                                                 std::uint64_t seed_count, int max_points,
                                                 Budget& budget);

}  // namespace covlab
