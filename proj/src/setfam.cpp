#include "covlab/setfam.hpp"

#include <set>

namespace covlab {

SetFamily powerset(int n) {
  require_ground(n);
  std::vector<mask_t> all;
  all.reserve(std::size_t{1} << n);
  for (mask_t m = 0; m <= full_mask(n); ++m) {
    all.push_back(m);
    if (m == full_mask(n)) break;  // avoid wrap at n == 0
  }
  return SetFamily::of(n, std::move(all));
}

SetFamily transversal_dual(const SetFamily& E) {
  std::vector<mask_t> out;
  mask_t full = full_mask(E.ground);
  for (mask_t a = 0;; ++a) {
    bool meets_all = true;
    for (mask_t e : E.sets)
      if ((a & e) == 0) {
        meets_all = false;
        break;
      }
    if (meets_all) out.push_back(a);
    if (a == full) break;
  }
  return SetFamily::of(E.ground, std::move(out));
}

SetFamily upward_closure(const SetFamily& E) {
  std::vector<mask_t> out;
  mask_t full = full_mask(E.ground);
  for (mask_t a = 0;; ++a) {
    for (mask_t e : E.sets)
      if ((a & e) == e) {
        out.push_back(a);
        break;
      }
    if (a == full) break;
  }
  return SetFamily::of(E.ground, std::move(out));
}

SetFamily downward_closure(const SetFamily& B) {
  std::set<mask_t> out;
  for (mask_t b : B.sets) {
    // enumerate all submasks of b
    mask_t s = b;
    while (true) {
      out.insert(s);
      if (s == 0) break;
      s = (s - 1) & b;
    }
  }
  return SetFamily::of(B.ground, std::vector<mask_t>(out.begin(), out.end()));
}

bool is_upward_closed(const SetFamily& E) { return upward_closure(E) == E; }

Subset section_positions(int elem, const SetFamily& fam) {
  if (elem < 0 || elem >= fam.ground) throw IndexOutOfGround("section element out of ground");
  int n = fam.size();
  require_ground(n);  // positions serve as a ground set
  mask_t bits = 0;
  for (int j = 0; j < n; ++j)
    if ((fam.sets[j] >> elem) & 1u) bits |= mask_t{1} << j;
  return Subset(n, bits);
}

bool is_filter(const SetFamily& E) {
  if (E.empty()) return false;
  if (E.contains(0)) return false;
  if (!is_upward_closed(E)) return false;
  for (mask_t a : E.sets)
    for (mask_t b : E.sets)
      if (!E.contains(a & b)) return false;
  return true;
}

bool is_ultrafilter(const SetFamily& E) {
  return is_filter(E) && transversal_dual(E) == E;
}

SetFamily principal_ultrafilter(int i, int n) {
  require_ground(n);
  if (i < 0 || i >= n) throw IndexOutOfGround("principal ultrafilter point out of ground");
  std::vector<mask_t> out;
  for (mask_t a = 0;; ++a) {
    if ((a >> i) & 1u) out.push_back(a);
    if (a == full_mask(n)) break;
  }
  return SetFamily::of(n, std::move(out));
}

SetFamily family_card_below(int n, int mu) {
  require_ground(n);
  std::vector<mask_t> out;
  for (mask_t a = 0;; ++a) {
    if (std::popcount(a) < mu) out.push_back(a);
    if (a == full_mask(n)) break;
  }
  return SetFamily::of(n, std::move(out));
}

FamilyCollection filters_within(const FamilyCollection& calE) {
  const int n = calE.ground;
  const SetFamily pow = powerset(n);
  const int P = pow.size();
  require_ground(P);  // family-selection masks need one bit per subset
  std::vector<SetFamily> out;
  for (mask_t sel = 0;; ++sel) {
    std::vector<mask_t> sets;
    for (int j = 0; j < P; ++j)
      if ((sel >> j) & 1u) sets.push_back(pow.sets[j]);
    SetFamily f = SetFamily::of(n, std::move(sets));
    if (is_filter(f)) {
      for (const SetFamily& e : calE.families) {
        bool inside = true;
        for (mask_t m : f.sets)
          if (!e.contains(m)) {
            inside = false;
            break;
          }
        if (inside) {
          out.push_back(std::move(f));
          break;
        }
      }
    }
    if (sel == full_mask(P)) break;
  }
  return FamilyCollection::of(n, std::move(out));
}

SetFamily union_of(const FamilyCollection& c) {
  std::vector<mask_t> out;
  for (const auto& f : c.families) out.insert(out.end(), f.sets.begin(), f.sets.end());
  return SetFamily::of(c.ground, std::move(out));
}

SetFamily intersection_of(const FamilyCollection& c) {
  if (c.families.empty()) return powerset(c.ground);
  std::vector<mask_t> out;
  for (mask_t m : c.families.front().sets) {
    bool in_all = true;
    for (const auto& f : c.families)
      if (!f.contains(m)) {
        in_all = false;
        break;
      }
    if (in_all) out.push_back(m);
  }
  return SetFamily::of(c.ground, std::move(out));
}

}  // namespace covlab
