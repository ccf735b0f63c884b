#pragma once

#include <optional>

#include "covlab/fintop.hpp"

namespace covlab {

// Outcome of a decision procedure, with a re-checkable witness.
//   - failed covering property: the violating open sequence (cover_witness)
//   - failed accumulation property: the sequence with no accumulation point
//   - satisfied accumulation property: one chosen point per enumerated
//     sequence, in canonical enumeration order (assignment)
struct Verdict {
  bool holds = false;
  std::optional<SubsetSequence> cover_witness;
  std::optional<PointSequence> point_witness;
  std::optional<SubsetSequence> setseq_witness;
  std::optional<std::vector<int>> assignment;
};

// --- covering checkers -----------------------------------------------------

// Every A-indexed open cover admits H in B whose members cover X.
Verdict check_BA_compact(const Topology& X, int A_size, const SetFamily& B, Budget& budget);

// Independent decision path via closed-set sequences (the closed-family
// families); same truth value as check_BA_compact.
Verdict check_BA_compact_closed(const Topology& X, int A_size, const SetFamily& B,
                                Budget& budget);

// Relativized: the H-union need only meet every member of F.
Verdict check_F_BA_compact(const Topology& X, int A_size, const SetFamily& B,
                           const SetFamily& F, Budget& budget);
// Closed-sequence decision path for the same property.
Verdict check_F_BA_compact_closed(const Topology& X, int A_size, const SetFamily& B,
                                  const SetFamily& F, Budget& budget);

// Only sequences covering along every K in G are constrained.
Verdict check_BG_compact(const Topology& X, int A_size, const SetFamily& B,
                         const SetFamily& G, Budget& budget);
Verdict check_BG_compact_closed(const Topology& X, int A_size, const SetFamily& B,
                                const SetFamily& G, Budget& budget);

Verdict check_F_BG_compact(const Topology& X, int A_size, const SetFamily& B,
                           const SetFamily& G, const SetFamily& F, Budget& budget);
Verdict check_F_BG_compact_closed(const Topology& X, int A_size, const SetFamily& B,
                                  const SetFamily& G, const SetFamily& F, Budget& budget);

// --- accumulation checkers -------------------------------------------------

bool is_E_accumulation_point(const Topology& X, const PointSequence& seq, int x,
                             const SetFamily& E);

Verdict check_E_accumulation_property(const Topology& X, int I_size, const SetFamily& E,
                                      Budget& budget);

bool is_E_limit_point(const Topology& X, const SubsetSequence& setseq, int x,
                      const SetFamily& E);

// Every I-indexed sequence of members of F has an E-limit point.
Verdict check_F_E_accumulation(const Topology& X, int I_size, const SetFamily& E,
                               const SetFamily& F, Budget& budget);

// Every sequence has an E-accumulation (resp. E-limit) point for SOME member
// E of the collection.  With F absent, sequences are point sequences.
Verdict check_calE_accumulation(const Topology& X, int I_size, const FamilyCollection& calE,
                                const std::optional<SetFamily>& F, Budget& budget);

// --- ultrafilter convergence ----------------------------------------------

Verdict check_D_compact(const Topology& X, const SetFamily& D, Budget& budget);
// Covering form: [B, D]-compactness for B the point sections of D.
Verdict check_D_compact_covering(const Topology& X, const SetFamily& D, Budget& budget);

Verdict check_weak_M_compact(const Topology& X, const FamilyCollection& M, Budget& budget);
Verdict check_weak_M_compact_covering(const Topology& X, const FamilyCollection& M,
                                      Budget& budget);

Verdict check_quasi_M_compact(const Topology& X, const FamilyCollection& M, Budget& budget);
Verdict check_quasi_M_compact_covering(const Topology& X, const FamilyCollection& M,
                                       Budget& budget);

// --- selective covers and irreducibility -----------------------------------

// A cover class: an extensional list of subset sequences.
struct CoverClass {
  std::vector<SubsetSequence> members;
  bool contains(const SubsetSequence& s) const;
};

// Every subset sequence whose K-restrictions lie in classA for all K in G
// admits H in B with its H-restriction in classB.
Verdict check_selective_compact(const Topology& X, int A_size, const CoverClass& classA,
                                const CoverClass& classB, const SetFamily& B,
                                const SetFamily& G, Budget& budget);

// Restriction of an A-indexed sequence to the ascending members of mask.
SubsetSequence restrict_sequence(const SubsetSequence& s, mask_t mask);

// X has a cover of k open sets with no proper subcover.
Verdict has_irreducible_cover(const Topology& X, int k, Budget& budget);
// Companion form: a k-indexed point sequence where every point of X has a
// neighborhood meeting at most one sequence entry.
Verdict has_sparse_sequence(const Topology& X, int k, Budget& budget);

// --- single-instance rechecks (witness validation) --------------------------

// True when opens is an A-indexed open cover of X admitting no covering H in B.
bool is_violating_cover(const Topology& X, const SetFamily& B, const SubsetSequence& opens);
bool is_violating_F_cover(const Topology& X, const SetFamily& B, const SetFamily& F,
                          const SubsetSequence& opens);
bool is_violating_G_cover(const Topology& X, const SetFamily& B, const SetFamily& G,
                          const SubsetSequence& opens);
bool is_violating_FG_cover(const Topology& X, const SetFamily& B, const SetFamily& G,
                           const SetFamily& F, const SubsetSequence& opens);
// True when seq has no E-accumulation point in X.
bool has_no_E_accumulation_point(const Topology& X, const PointSequence& seq,
                                 const SetFamily& E);

}  // namespace covlab
