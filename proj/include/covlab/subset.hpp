#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "covlab/errors.hpp"

namespace covlab {

using mask_t = std::uint32_t;

inline mask_t full_mask(int ground) { return ground == 0 ? 0u : (mask_t{1} << ground) - 1; }

// A subset of a ground set {0..ground-1}, stored as a bitmask.
struct Subset {
  int ground = 0;
  mask_t bits = 0;

  Subset() = default;
  Subset(int ground_, mask_t bits_) : ground(ground_), bits(bits_) {
    require_ground(ground);
    if (bits & ~full_mask(ground)) throw IndexOutOfGround("subset member out of ground");
  }

  int card() const { return std::popcount(bits); }
  bool contains(int i) const { return i >= 0 && i < ground && (bits >> i) & 1u; }
  Subset complement() const { return Subset(ground, ~bits & full_mask(ground)); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < ground; ++i)
      if ((bits >> i) & 1u) out.push_back(i);
    return out;
  }

  static Subset from_members(int ground, const std::vector<int>& members) {
    mask_t m = 0;
    for (int i : members) {
      if (i < 0 || i >= ground) throw IndexOutOfGround("subset member out of ground");
      m |= mask_t{1} << i;
    }
    return Subset(ground, m);
  }

  friend bool operator==(const Subset&, const Subset&) = default;
};

// Canonical order on subsets of one ground set: cardinality first, then
// lexicographic on the ascending member list.
inline bool mask_less(mask_t a, mask_t b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  mask_t d = a ^ b;
  if (d == 0) return false;
  return (a & (d & -d)) != 0;  // the set holding the least differing element comes first
}

}  // namespace covlab
