#pragma once

#include "covlab/fintop.hpp"

namespace covlab {

// The canonical non-[B,A]-compact space: points are B's members (in canonical
// order), subbase { a-not-in = { H in B : a not in H } : a in A }.
// Requires B nonempty and full(A) not in B; the subbase cover itself witnesses
// non-compactness, which the constructor asserts.
Topology example_space_a(int A_size, const SetFamily& B);

// Same point set with the finer subbase { a-not-in } union { a-in }; still a
// counterexample to [B,A]-compactness.
Topology example_space_b(int A_size, const SetFamily& B);

// The subbase cover (a-not-in)_{a in A} of either example space, as an
// A-indexed open sequence; a valid violating witness for both.
SubsetSequence example_space_witness(int A_size, const SetFamily& B);

// { i^<_A : i in I }, point sections as position subsets of A.
SetFamily sections_family(int I_size, const SetFamily& A);

// { Z <= positions(B) : union of Z's members = full A }.
SetFamily cover_dual_family(int A_size, const SetFamily& B, Budget& budget);

// P(A) minus the full set.
SetFamily irreducible_test_family(int A_size);
// { A minus {a} : a in A }.
SetFamily complements_family(int A_size);
// { [0, n) : n < A_size }.
SetFamily initial_segments(int A_size);

enum class SelectorMode { OneOf, AtMostK };

// For a partition G of {0..A_size-1}: one-of selects exactly one element per
// class; at-most-k bounds each class intersection by k.
SetFamily selector_families(int A_size, const SetFamily& G, SelectorMode mode, int k = 1);

}  // namespace covlab
