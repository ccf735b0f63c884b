#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "covlab/subset.hpp"

namespace covlab {

// A finite family of subsets of one ground set, kept in canonical order
// (cardinality, then lexicographic) with no duplicates.
struct SetFamily {
  int ground = 0;
  std::vector<mask_t> sets;

  SetFamily() = default;
  explicit SetFamily(int ground_) : ground(ground_) { require_ground(ground); }

  static SetFamily of(int ground, std::vector<mask_t> raw) {
    require_ground(ground);
    for (mask_t m : raw)
      if (m & ~full_mask(ground)) throw IndexOutOfGround("family member out of ground");
    std::sort(raw.begin(), raw.end(), mask_less);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    SetFamily f(ground);
    f.sets = std::move(raw);
    return f;
  }

  int size() const { return static_cast<int>(sets.size()); }
  bool empty() const { return sets.empty(); }
  bool contains(mask_t m) const {
    return std::binary_search(sets.begin(), sets.end(), m, mask_less);
  }
  // Position of m in canonical order, or nullopt.
  std::optional<int> position(mask_t m) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), m, mask_less);
    if (it == sets.end() || *it != m) return std::nullopt;
    return static_cast<int>(it - sets.begin());
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

inline bool family_less(const SetFamily& a, const SetFamily& b) {
  if (a.sets.size() != b.sets.size()) return a.sets.size() < b.sets.size();
  return std::lexicographical_compare(a.sets.begin(), a.sets.end(), b.sets.begin(),
                                      b.sets.end(), mask_less);
}

// A finite set of SetFamilies over one ground set.
struct FamilyCollection {
  int ground = 0;
  std::vector<SetFamily> families;

  FamilyCollection() = default;
  explicit FamilyCollection(int ground_) : ground(ground_) { require_ground(ground); }

  static FamilyCollection of(int ground, std::vector<SetFamily> raw) {
    require_ground(ground);
    for (const auto& f : raw)
      if (f.ground != ground) throw IndexOutOfGround("family ground mismatch in collection");
    std::sort(raw.begin(), raw.end(), family_less);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    FamilyCollection c(ground);
    c.families = std::move(raw);
    return c;
  }

  int size() const { return static_cast<int>(families.size()); }

  friend bool operator==(const FamilyCollection&, const FamilyCollection&) = default;
};

// All 2^n subsets of {0..n-1}.
SetFamily powerset(int n);

// E+ = { a <= I : a meets every e in E }.  Always upward closed.
SetFamily transversal_dual(const SetFamily& E);

SetFamily upward_closure(const SetFamily& E);
SetFamily downward_closure(const SetFamily& B);
bool is_upward_closed(const SetFamily& E);

// Positions (into the family's canonical order) of members containing elem.
// Serves both i^<_A (point_section) and a^<_B (member_section).
Subset section_positions(int elem, const SetFamily& fam);

bool is_filter(const SetFamily& E);
bool is_ultrafilter(const SetFamily& E);

// { a <= {0..n-1} : i in a }.
SetFamily principal_ultrafilter(int i, int n);

// All subsets of {0..n-1} of cardinality < mu.
SetFamily family_card_below(int n, int mu);

// All filters over the ground contained in some member of the collection.
// For members closed under supersets, calE-accumulation is unchanged by
// replacing calE with this collection.
FamilyCollection filters_within(const FamilyCollection& calE);

// Union of all member families of a collection, as one family.
SetFamily union_of(const FamilyCollection& c);

// Intersection of all member families; the empty collection yields the
// full powerset (universal convention).
SetFamily intersection_of(const FamilyCollection& c);

}  // namespace covlab
