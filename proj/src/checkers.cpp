#include "covlab/checkers.hpp"

#include "covlab/enumerate.hpp"

namespace covlab {

namespace {

mask_t union_over(const std::vector<mask_t>& seq, mask_t idx) {
  mask_t u = 0;
  for (int a = 0; idx != 0; ++a, idx >>= 1)
    if (idx & 1u) u |= seq[a];
  return u;
}

mask_t inter_over(const std::vector<mask_t>& seq, mask_t idx, mask_t full) {
  mask_t u = full;  // the empty intersection of point sets is the whole space
  for (int a = 0; idx != 0; ++a, idx >>= 1)
    if (idx & 1u) u &= seq[a];
  return u;
}

std::vector<mask_t> materialize(const std::vector<int>& digits, const std::vector<mask_t>& pool) {
  std::vector<mask_t> out(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) out[i] = pool[digits[i]];
  return out;
}

// All masks over ground A_size, in numeric order (used as an index pool).
std::vector<mask_t> all_masks(int n) {
  std::vector<mask_t> out;
  out.reserve(std::size_t{1} << n);
  for (mask_t m = 0;; ++m) {
    out.push_back(m);
    if (m == full_mask(n)) break;
  }
  return out;
}

}  // namespace

bool is_violating_cover(const Topology& X, const SetFamily& B, const SubsetSequence& opens) {
  for (mask_t o : opens.values)
    if (!X.is_open(o)) return false;
  if (union_over(opens.values, full_mask(opens.index_size)) != X.full()) return false;
  for (mask_t h : B.sets)
    if (union_over(opens.values, h) == X.full()) return false;
  return true;
}

bool is_violating_F_cover(const Topology& X, const SetFamily& B, const SetFamily& F,
                          const SubsetSequence& opens) {
  for (mask_t o : opens.values)
    if (!X.is_open(o)) return false;
  if (union_over(opens.values, full_mask(opens.index_size)) != X.full()) return false;
  for (mask_t h : B.sets) {
    mask_t u = union_over(opens.values, h);
    bool meets_all = true;
    for (mask_t f : F.sets)
      if ((u & f) == 0) {
        meets_all = false;
        break;
      }
    if (meets_all) return false;
  }
  return true;
}

bool is_violating_G_cover(const Topology& X, const SetFamily& B, const SetFamily& G,
                          const SubsetSequence& opens) {
  for (mask_t o : opens.values)
    if (!X.is_open(o)) return false;
  for (mask_t k : G.sets)
    if (union_over(opens.values, k) != X.full()) return false;
  for (mask_t h : B.sets)
    if (union_over(opens.values, h) == X.full()) return false;
  return true;
}

bool is_violating_FG_cover(const Topology& X, const SetFamily& B, const SetFamily& G,
                           const SetFamily& F, const SubsetSequence& opens) {
  for (mask_t o : opens.values)
    if (!X.is_open(o)) return false;
  for (mask_t k : G.sets)
    if (union_over(opens.values, k) != X.full()) return false;
  for (mask_t h : B.sets) {
    mask_t u = union_over(opens.values, h);
    bool meets_all = true;
    for (mask_t f : F.sets)
      if ((u & f) == 0) {
        meets_all = false;
        break;
      }
    if (meets_all) return false;
  }
  return true;
}

Verdict check_BA_compact(const Topology& X, int A_size, const SetFamily& B, Budget& budget) {
  require_ground(A_size);
  if (B.ground != A_size) throw IndexOutOfGround("B ground differs from A size");
  Odometer od(A_size, X.opens.size());
  budget.charge(od.total());
  for (; od.valid(); od.next()) {
    SubsetSequence seq(A_size, X.points, materialize(od.digits(), X.opens.sets));
    if (is_violating_cover(X, B, seq))
      return Verdict{.holds = false, .cover_witness = std::move(seq)};
  }
  return Verdict{.holds = true};
}

Verdict check_BA_compact_closed(const Topology& X, int A_size, const SetFamily& B,
                                Budget& budget) {
  require_ground(A_size);
  if (B.ground != A_size) throw IndexOutOfGround("B ground differs from A size");
  Odometer od(A_size, X.opens.size());
  budget.charge(od.total());
  const mask_t full = X.full();
  for (; od.valid(); od.next()) {
    std::vector<mask_t> closed(A_size);
    for (int a = 0; a < A_size; ++a) closed[a] = ~X.opens.sets[od.digits()[a]] & full;
    bool hyp = true;
    for (mask_t h : B.sets)
      if (inter_over(closed, h, full) == 0) {
        hyp = false;
        break;
      }
    if (hyp && inter_over(closed, full_mask(A_size), full) == 0) {
      std::vector<mask_t> complements(A_size);
      for (int a = 0; a < A_size; ++a) complements[a] = ~closed[a] & full;
      return Verdict{.holds = false,
                     .cover_witness = SubsetSequence(A_size, X.points, std::move(complements))};
    }
  }
  return Verdict{.holds = true};
}

Verdict check_F_BA_compact(const Topology& X, int A_size, const SetFamily& B,
                           const SetFamily& F, Budget& budget) {
  require_ground(A_size);
  if (B.ground != A_size) throw IndexOutOfGround("B ground differs from A size");
  if (F.ground != X.points) throw IndexOutOfGround("F ground differs from point count");
  Odometer od(A_size, X.opens.size());
  budget.charge(od.total());
  for (; od.valid(); od.next()) {
    SubsetSequence seq(A_size, X.points, materialize(od.digits(), X.opens.sets));
    if (is_violating_F_cover(X, B, F, seq))
      return Verdict{.holds = false, .cover_witness = std::move(seq)};
  }
  return Verdict{.holds = true};
}

Verdict check_F_BA_compact_closed(const Topology& X, int A_size, const SetFamily& B,
                                  const SetFamily& F, Budget& budget) {
  require_ground(A_size);
  if (B.ground != A_size) throw IndexOutOfGround("B ground differs from A size");
  if (F.ground != X.points) throw IndexOutOfGround("F ground differs from point count");
  Odometer od(A_size, X.opens.size());
  budget.charge(od.total());
  const mask_t full = X.full();
  for (; od.valid(); od.next()) {
    std::vector<mask_t> closed(A_size);
    for (int a = 0; a < A_size; ++a) closed[a] = ~X.opens.sets[od.digits()[a]] & full;
    bool hyp = true;
    for (mask_t h : B.sets) {
      mask_t inter = inter_over(closed, h, full);
      bool some_f_inside = false;
      for (mask_t f : F.sets)
        if ((f & ~inter) == 0) {
          some_f_inside = true;
          break;
        }
      if (!some_f_inside) {
        hyp = false;
        break;
      }
    }
    if (hyp && inter_over(closed, full_mask(A_size), full) == 0) {
      std::vector<mask_t> complements(A_size);
      for (int a = 0; a < A_size; ++a) complements[a] = ~closed[a] & full;
      return Verdict{.holds = false,
                     .cover_witness = SubsetSequence(A_size, X.points, std::move(complements))};
    }
  }
  return Verdict{.holds = true};
}

Verdict check_BG_compact(const Topology& X, int A_size, const SetFamily& B,
                         const SetFamily& G, Budget& budget) {
  require_ground(A_size);
  if (B.ground != A_size || G.ground != A_size)
    throw IndexOutOfGround("B or G ground differs from A size");
  Odometer od(A_size, X.opens.size());
  budget.charge(od.total());
  for (; od.valid(); od.next()) {
    SubsetSequence seq(A_size, X.points, materialize(od.digits(), X.opens.sets));
    if (is_violating_G_cover(X, B, G, seq))
      return Verdict{.holds = false, .cover_witness = std::move(seq)};
  }
  return Verdict{.holds = true};
}

Verdict check_BG_compact_closed(const Topology& X, int A_size, const SetFamily& B,
                                const SetFamily& G, Budget& budget) {
  require_ground(A_size);
  if (B.ground != A_size || G.ground != A_size)
    throw IndexOutOfGround("B or G ground differs from A size");
  Odometer od(A_size, X.opens.size());
  budget.charge(od.total());
  const mask_t full = X.full();
  for (; od.valid(); od.next()) {
    std::vector<mask_t> closed(A_size);
    for (int a = 0; a < A_size; ++a) closed[a] = ~X.opens.sets[od.digits()[a]] & full;
    bool hyp = true;
    for (mask_t h : B.sets)
      if (inter_over(closed, h, full) == 0) {
        hyp = false;
        break;
      }
    if (!hyp) continue;
    bool concl = false;
    for (mask_t k : G.sets)
      if (inter_over(closed, k, full) != 0) {
        concl = true;
        break;
      }
    if (!concl) {
      std::vector<mask_t> complements(A_size);
      for (int a = 0; a < A_size; ++a) complements[a] = ~closed[a] & full;
      return Verdict{.holds = false,
                     .cover_witness = SubsetSequence(A_size, X.points, std::move(complements))};
    }
  }
  return Verdict{.holds = true};
}

Verdict check_F_BG_compact(const Topology& X, int A_size, const SetFamily& B,
                           const SetFamily& G, const SetFamily& F, Budget& budget) {
  require_ground(A_size);
  if (B.ground != A_size || G.ground != A_size)
    throw IndexOutOfGround("B or G ground differs from A size");
  if (F.ground != X.points) throw IndexOutOfGround("F ground differs from point count");
  Odometer od(A_size, X.opens.size());
  budget.charge(od.total());
  for (; od.valid(); od.next()) {
    SubsetSequence seq(A_size, X.points, materialize(od.digits(), X.opens.sets));
    if (is_violating_FG_cover(X, B, G, F, seq))
      return Verdict{.holds = false, .cover_witness = std::move(seq)};
  }
  return Verdict{.holds = true};
}

Verdict check_F_BG_compact_closed(const Topology& X, int A_size, const SetFamily& B,
                                  const SetFamily& G, const SetFamily& F, Budget& budget) {
  require_ground(A_size);
  if (B.ground != A_size || G.ground != A_size)
    throw IndexOutOfGround("B or G ground differs from A size");
  if (F.ground != X.points) throw IndexOutOfGround("F ground differs from point count");
  Odometer od(A_size, X.opens.size());
  budget.charge(od.total());
  const mask_t full = X.full();
  for (; od.valid(); od.next()) {
    std::vector<mask_t> closed(A_size);
    for (int a = 0; a < A_size; ++a) closed[a] = ~X.opens.sets[od.digits()[a]] & full;
    bool hyp = true;
    for (mask_t h : B.sets) {
      mask_t inter = inter_over(closed, h, full);
      bool some_f_inside = false;
      for (mask_t f : F.sets)
        if ((f & ~inter) == 0) {
          some_f_inside = true;
          break;
        }
      if (!some_f_inside) {
        hyp = false;
        break;
      }
    }
    if (!hyp) continue;
    bool concl = false;
    for (mask_t k : G.sets)
      if (inter_over(closed, k, full) != 0) {
        concl = true;
        break;
      }
    if (!concl) {
      std::vector<mask_t> complements(A_size);
      for (int a = 0; a < A_size; ++a) complements[a] = ~closed[a] & full;
      return Verdict{.holds = false,
                     .cover_witness = SubsetSequence(A_size, X.points, std::move(complements))};
    }
  }
  return Verdict{.holds = true};
}

bool is_E_accumulation_point(const Topology& X, const PointSequence& seq, int x,
                             const SetFamily& E) {
  if (x < 0 || x >= X.points) throw IndexOutOfGround("point out of space");
  if (E.ground != seq.index_size) throw IndexOutOfGround("E ground differs from index size");
  for (int v : seq.values)
    if (v < 0 || v >= X.points) throw IndexOutOfGround("sequence value out of space");
  for (mask_t u : X.opens.sets) {
    if (!((u >> x) & 1u)) continue;
    mask_t idx = 0;
    for (int i = 0; i < seq.index_size; ++i)
      if ((u >> seq.values[i]) & 1u) idx |= mask_t{1} << i;
    if (!E.contains(idx)) return false;
  }
  return true;
}

bool has_no_E_accumulation_point(const Topology& X, const PointSequence& seq,
                                 const SetFamily& E) {
  for (int x = 0; x < X.points; ++x)
    if (is_E_accumulation_point(X, seq, x, E)) return false;
  return true;
}

Verdict check_E_accumulation_property(const Topology& X, int I_size, const SetFamily& E,
                                      Budget& budget) {
  require_ground(I_size);
  if (E.ground != I_size) throw IndexOutOfGround("E ground differs from index size");
  Odometer od(I_size, X.points);
  budget.charge(od.total());
  std::vector<int> assignment;
  for (; od.valid(); od.next()) {
    PointSequence seq(I_size, od.digits());
    int found = -1;
    for (int x = 0; x < X.points; ++x)
      if (is_E_accumulation_point(X, seq, x, E)) {
        found = x;
        break;
      }
    if (found < 0) return Verdict{.holds = false, .point_witness = std::move(seq)};
    assignment.push_back(found);
  }
  return Verdict{.holds = true, .assignment = std::move(assignment)};
}

bool is_E_limit_point(const Topology& X, const SubsetSequence& setseq, int x,
                      const SetFamily& E) {
  if (x < 0 || x >= X.points) throw IndexOutOfGround("point out of space");
  if (E.ground != setseq.index_size)
    throw IndexOutOfGround("E ground differs from index size");
  if (setseq.subset_ground != X.points) throw IndexOutOfGround("set sequence out of space");
  for (mask_t u : X.opens.sets) {
    if (!((u >> x) & 1u)) continue;
    mask_t idx = 0;
    for (int i = 0; i < setseq.index_size; ++i)
      if (setseq.values[i] & u) idx |= mask_t{1} << i;
    if (!E.contains(idx)) return false;
  }
  return true;
}

Verdict check_F_E_accumulation(const Topology& X, int I_size, const SetFamily& E,
                               const SetFamily& F, Budget& budget) {
  require_ground(I_size);
  if (E.ground != I_size) throw IndexOutOfGround("E ground differs from index size");
  if (F.ground != X.points) throw IndexOutOfGround("F ground differs from point count");
  Odometer od(I_size, F.size());
  budget.charge(od.total());
  std::vector<int> assignment;
  for (; od.valid(); od.next()) {
    SubsetSequence seq(I_size, X.points, materialize(od.digits(), F.sets));
    int found = -1;
    for (int x = 0; x < X.points; ++x)
      if (is_E_limit_point(X, seq, x, E)) {
        found = x;
        break;
      }
    if (found < 0) return Verdict{.holds = false, .setseq_witness = std::move(seq)};
    assignment.push_back(found);
  }
  return Verdict{.holds = true, .assignment = std::move(assignment)};
}

Verdict check_calE_accumulation(const Topology& X, int I_size, const FamilyCollection& calE,
                                const std::optional<SetFamily>& F, Budget& budget) {
  require_ground(I_size);
  if (calE.ground != I_size)
    throw IndexOutOfGround("collection ground differs from index size");
  if (F) {
    if (F->ground != X.points) throw IndexOutOfGround("F ground differs from point count");
    Odometer od(I_size, F->size());
    budget.charge(od.total());
    std::vector<int> assignment;
    for (; od.valid(); od.next()) {
      SubsetSequence seq(I_size, X.points, materialize(od.digits(), F->sets));
      int found = -1;
      for (int x = 0; x < X.points && found < 0; ++x)
        for (const SetFamily& E : calE.families)
          if (is_E_limit_point(X, seq, x, E)) {
            found = x;
            break;
          }
      if (found < 0) return Verdict{.holds = false, .setseq_witness = std::move(seq)};
      assignment.push_back(found);
    }
    return Verdict{.holds = true, .assignment = std::move(assignment)};
  }
  Odometer od(I_size, X.points);
  budget.charge(od.total());
  std::vector<int> assignment;
  for (; od.valid(); od.next()) {
    PointSequence seq(I_size, od.digits());
    int found = -1;
    for (int x = 0; x < X.points && found < 0; ++x)
      for (const SetFamily& E : calE.families)
        if (is_E_accumulation_point(X, seq, x, E)) {
          found = x;
          break;
        }
    if (found < 0) return Verdict{.holds = false, .point_witness = std::move(seq)};
    assignment.push_back(found);
  }
  return Verdict{.holds = true, .assignment = std::move(assignment)};
}

Verdict check_D_compact(const Topology& X, const SetFamily& D, Budget& budget) {
  if (!is_ultrafilter(D)) throw NotAnUltrafilter("D is not an ultrafilter");
  return check_E_accumulation_property(X, D.ground, D, budget);
}

Verdict check_D_compact_covering(const Topology& X, const SetFamily& D, Budget& budget) {
  if (!is_ultrafilter(D)) throw NotAnUltrafilter("D is not an ultrafilter");
  std::vector<mask_t> sections;
  for (int i = 0; i < D.ground; ++i) sections.push_back(section_positions(i, D).bits);
  return check_BA_compact(X, D.size(), SetFamily::of(D.size(), std::move(sections)), budget);
}

Verdict check_weak_M_compact(const Topology& X, const FamilyCollection& M, Budget& budget) {
  for (const auto& d : M.families)
    if (!is_ultrafilter(d)) throw NotAnUltrafilter("member of M is not an ultrafilter");
  return check_E_accumulation_property(X, M.ground, union_of(M), budget);
}

Verdict check_weak_M_compact_covering(const Topology& X, const FamilyCollection& M,
                                      Budget& budget) {
  for (const auto& d : M.families)
    if (!is_ultrafilter(d)) throw NotAnUltrafilter("member of M is not an ultrafilter");
  SetFamily F = intersection_of(M);
  std::vector<mask_t> sections;
  for (int i = 0; i < M.ground; ++i) sections.push_back(section_positions(i, F).bits);
  return check_BA_compact(X, F.size(), SetFamily::of(F.size(), std::move(sections)), budget);
}

Verdict check_quasi_M_compact(const Topology& X, const FamilyCollection& M, Budget& budget) {
  for (const auto& d : M.families)
    if (!is_ultrafilter(d)) throw NotAnUltrafilter("member of M is not an ultrafilter");
  Odometer od(M.ground, X.points);
  budget.charge(od.total());
  std::vector<int> assignment;
  for (; od.valid(); od.next()) {
    PointSequence seq(M.ground, od.digits());
    int found = -1;
    for (int x = 0; x < X.points && found < 0; ++x)
      for (const SetFamily& D : M.families)
        if (is_E_accumulation_point(X, seq, x, D)) {
          found = x;
          break;
        }
    if (found < 0) return Verdict{.holds = false, .point_witness = std::move(seq)};
    assignment.push_back(found);
  }
  return Verdict{.holds = true, .assignment = std::move(assignment)};
}

Verdict check_quasi_M_compact_covering(const Topology& X, const FamilyCollection& M,
                                       Budget& budget) {
  for (const auto& d : M.families)
    if (!is_ultrafilter(d)) throw NotAnUltrafilter("member of M is not an ultrafilter");
  SetFamily A = union_of(M);
  std::vector<mask_t> sections;
  for (int i = 0; i < M.ground; ++i) sections.push_back(section_positions(i, A).bits);
  SetFamily B = SetFamily::of(A.size(), std::move(sections));
  std::vector<mask_t> gmasks;
  for (const SetFamily& D : M.families) {
    mask_t g = 0;
    for (mask_t z : D.sets) g |= mask_t{1} << *A.position(z);
    gmasks.push_back(g);
  }
  return check_BG_compact(X, A.size(), B, SetFamily::of(A.size(), std::move(gmasks)), budget);
}

bool CoverClass::contains(const SubsetSequence& s) const {
  for (const auto& m : members)
    if (m == s) return true;
  return false;
}

SubsetSequence restrict_sequence(const SubsetSequence& s, mask_t mask) {
  std::vector<mask_t> vals;
  for (int a = 0; a < s.index_size; ++a)
    if ((mask >> a) & 1u) vals.push_back(s.values[a]);
  const int len = static_cast<int>(vals.size());
  return SubsetSequence(len, s.subset_ground, std::move(vals));
}

Verdict check_selective_compact(const Topology& X, int A_size, const CoverClass& classA,
                                const CoverClass& classB, const SetFamily& B,
                                const SetFamily& G, Budget& budget) {
  require_ground(A_size);
  if (B.ground != A_size || G.ground != A_size)
    throw IndexOutOfGround("B or G ground differs from A size");
  std::vector<mask_t> pool = all_masks(X.points);
  Odometer od(A_size, static_cast<int>(pool.size()));
  budget.charge(od.total());
  for (; od.valid(); od.next()) {
    SubsetSequence seq(A_size, X.points, materialize(od.digits(), pool));
    bool constrained = true;
    for (mask_t k : G.sets)
      if (!classA.contains(restrict_sequence(seq, k))) {
        constrained = false;
        break;
      }
    if (!constrained) continue;
    bool ok = false;
    for (mask_t h : B.sets)
      if (classB.contains(restrict_sequence(seq, h))) {
        ok = true;
        break;
      }
    if (!ok) return Verdict{.holds = false, .cover_witness = std::move(seq)};
  }
  return Verdict{.holds = true};
}

Verdict has_irreducible_cover(const Topology& X, int k, Budget& budget) {
  require_ground(k);
  std::vector<mask_t> proper;
  for (mask_t m = 0; m != full_mask(k); ++m) proper.push_back(m);
  Verdict v = check_BA_compact(X, k, SetFamily::of(k, std::move(proper)), budget);
  return Verdict{.holds = !v.holds, .cover_witness = std::move(v.cover_witness)};
}

Verdict has_sparse_sequence(const Topology& X, int k, Budget& budget) {
  require_ground(k);
  Odometer od(k, X.points);
  budget.charge(od.total());
  for (; od.valid(); od.next()) {
    PointSequence seq(k, od.digits());
    bool sparse = true;
    for (int x = 0; x < X.points && sparse; ++x) {
      bool has_thin_nbhd = false;
      for (mask_t u : X.opens.sets) {
        if (!((u >> x) & 1u)) continue;
        int hits = 0;
        for (int i = 0; i < k; ++i)
          if ((u >> seq.values[i]) & 1u) ++hits;
        if (hits <= 1) {
          has_thin_nbhd = true;
          break;
        }
      }
      if (!has_thin_nbhd) sparse = false;
    }
    if (sparse) return Verdict{.holds = true, .point_witness = std::move(seq)};
  }
  return Verdict{.holds = false};
}

}  // namespace covlab
