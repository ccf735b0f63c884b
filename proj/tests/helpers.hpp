#pragma once

#include <initializer_list>
#include <vector>

#include "covlab/fintop.hpp"

namespace covlab::testutil {

inline mask_t msk(std::initializer_list<int> members) {
  mask_t m = 0;
  for (int i : members) m |= mask_t{1} << i;
  return m;
}

inline SetFamily fam(int ground, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<mask_t> raw;
  for (auto s : sets) raw.push_back(msk(s));
  return SetFamily::of(ground, std::move(raw));
}

inline FamilyCollection coll(int ground, std::vector<SetFamily> fams) {
  return FamilyCollection::of(ground, std::move(fams));
}

inline Topology topo(int points, std::initializer_list<std::initializer_list<int>> opens) {
  return Topology(points, fam(points, opens));
}

// All 2^(2^ground) families over the ground set, for exhaustive sweeps.
inline std::vector<SetFamily> all_families(int ground) {
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

}  // namespace covlab::testutil
