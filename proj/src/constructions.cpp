#include "covlab/constructions.hpp"

#include "covlab/checkers.hpp"

namespace covlab {

namespace {

void check_example_pre(int A_size, const SetFamily& B) {
  require_ground(A_size);
  if (B.ground != A_size) throw IndexOutOfGround("B ground differs from A size");
  if (B.empty()) throw PreconditionViolated("B must be nonempty");
  if (B.contains(full_mask(A_size)))
    throw PreconditionViolated("the full index set must not belong to B");
}

// a-not-in = { H in B : a not in H }, as a mask over B's positions.
mask_t a_not_in(int a, const SetFamily& B) {
  mask_t m = 0;
  for (int j = 0; j < B.size(); ++j)
    if (!((B.sets[j] >> a) & 1u)) m |= mask_t{1} << j;
  return m;
}

void assert_witness_violates(const Topology& X, int A_size, const SetFamily& B) {
  SubsetSequence w = example_space_witness(A_size, B);
  if (!is_violating_cover(X, B, w))
    throw std::logic_error("example space construction failed its witness check");
}

}  // namespace

SubsetSequence example_space_witness(int A_size, const SetFamily& B) {
  check_example_pre(A_size, B);
  std::vector<mask_t> vals(A_size);
  for (int a = 0; a < A_size; ++a) vals[a] = a_not_in(a, B);
  return SubsetSequence(A_size, B.size(), std::move(vals));
}

Topology example_space_a(int A_size, const SetFamily& B) {
  check_example_pre(A_size, B);
  int n = B.size();
  require_ground(n);
  std::vector<mask_t> sub;
  for (int a = 0; a < A_size; ++a) sub.push_back(a_not_in(a, B));
  Topology X = topology_from_subbase(n, SetFamily::of(n, std::move(sub)));
  assert_witness_violates(X, A_size, B);
  return X;
}

Topology example_space_b(int A_size, const SetFamily& B) {
  check_example_pre(A_size, B);
  int n = B.size();
  require_ground(n);
  std::vector<mask_t> sub;
  for (int a = 0; a < A_size; ++a) {
    mask_t lo = a_not_in(a, B);
    sub.push_back(lo);
    sub.push_back(~lo & full_mask(n));  // a-in
  }
  Topology X = topology_from_subbase(n, SetFamily::of(n, std::move(sub)));
  assert_witness_violates(X, A_size, B);
  return X;
}

SetFamily sections_family(int I_size, const SetFamily& A) {
  require_ground(I_size);
  if (A.ground != I_size) throw IndexOutOfGround("A ground differs from I size");
  std::vector<mask_t> out;
  for (int i = 0; i < I_size; ++i) out.push_back(section_positions(i, A).bits);
  return SetFamily::of(A.size(), std::move(out));
}

SetFamily cover_dual_family(int A_size, const SetFamily& B, Budget& budget) {
  require_ground(A_size);
  if (B.ground != A_size) throw IndexOutOfGround("B ground differs from A size");
  int n = B.size();
  require_ground(n);
  budget.charge(std::uint64_t{1} << n);
  std::vector<mask_t> out;
  for (mask_t z = 0;; ++z) {
    mask_t u = 0;
    for (int j = 0; j < n; ++j)
      if ((z >> j) & 1u) u |= B.sets[j];
    if (u == full_mask(A_size)) out.push_back(z);
    if (z == full_mask(n)) break;
  }
  return SetFamily::of(n, std::move(out));
}

SetFamily irreducible_test_family(int A_size) {
  require_ground(A_size);
  std::vector<mask_t> out;
  for (mask_t m = 0; m != full_mask(A_size); ++m) out.push_back(m);
  return SetFamily::of(A_size, std::move(out));
}

SetFamily complements_family(int A_size) {
  require_ground(A_size);
  std::vector<mask_t> out;
  for (int a = 0; a < A_size; ++a)
    out.push_back(~(mask_t{1} << a) & full_mask(A_size));
  return SetFamily::of(A_size, std::move(out));
}

SetFamily initial_segments(int A_size) {
  require_ground(A_size);
  std::vector<mask_t> out;
  for (int n = 0; n < A_size; ++n) out.push_back(full_mask(n));
  return SetFamily::of(A_size, std::move(out));
}

SetFamily selector_families(int A_size, const SetFamily& G, SelectorMode mode, int k) {
  require_ground(A_size);
  if (G.ground != A_size) throw IndexOutOfGround("partition ground differs from A size");
  mask_t seen = 0;
  for (mask_t g : G.sets) {
    if (g == 0) throw NotAPartition("partition class is empty");
    if (g & seen) throw NotAPartition("partition classes are not disjoint");
    seen |= g;
  }
  if (seen != full_mask(A_size)) throw NotAPartition("partition does not exhaust the ground");
  std::vector<mask_t> out;
  for (mask_t h = 0;; ++h) {
    bool ok = true;
    for (mask_t g : G.sets) {
      int inter = std::popcount(h & g);
      if (mode == SelectorMode::OneOf ? inter != 1 : inter > k) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(h);
    if (h == full_mask(A_size)) break;
  }
  return SetFamily::of(A_size, std::move(out));
}

}  // namespace covlab
