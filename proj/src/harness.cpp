#include "covlab/harness.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "covlab/enumerate.hpp"

namespace covlab {

namespace {

mask_t union_over(const std::vector<mask_t>& seq, mask_t idx) {
  mask_t u = 0;
  for (int a = 0; idx != 0; ++a, idx >>= 1)
    if (idx & 1u) u |= seq[a];
  return u;
}

std::vector<mask_t> materialize(const std::vector<int>& digits, const std::vector<mask_t>& pool) {
  std::vector<mask_t> out(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) out[i] = pool[digits[i]];
  return out;
}

std::vector<mask_t> singleton_masks(int n) {
  std::vector<mask_t> out;
  for (int x = 0; x < n; ++x) out.push_back(mask_t{1} << x);
  return out;
}

std::vector<mask_t> nonempty_masks(int n) {
  std::vector<mask_t> out;
  for (mask_t m = 1; m != 0 && m <= full_mask(n); ++m) out.push_back(m);
  return out;
}

bool contains_some(const SetFamily& F, mask_t y) {
  for (mask_t f : F.sets)
    if ((f & ~y) == 0) return true;
  return false;
}

std::vector<mask_t> a_sections(int A_size, const SetFamily& B) {
  std::vector<mask_t> out(A_size);
  for (int a = 0; a < A_size; ++a) out[a] = section_positions(a, B).bits;
  return out;
}

// Subset-sequence conditions: every (P_a) with nonempty (resp. F-large)
// H-intersections for all H in B has some K in concl_sets whose closure
// intersection is nonempty.
bool cond_subset_seq(const Topology& X, int A_size, const SetFamily& B,
                     const std::vector<std::vector<mask_t>>& pools, const SetFamily* F,
                     const std::vector<mask_t>& concl_sets, Budget& budget) {
  std::vector<int> radii;
  radii.reserve(pools.size());
  for (const auto& p : pools) radii.push_back(static_cast<int>(p.size()));
  Odometer od(std::move(radii));
  budget.charge(od.total());
  const mask_t full = X.full();
  for (; od.valid(); od.next()) {
    std::vector<mask_t> P(A_size);
    for (int a = 0; a < A_size; ++a) P[a] = pools[a][od.digits()[a]];
    bool hyp = true;
    for (mask_t h : B.sets) {
      mask_t inter = full;
      for (int a = 0; a < A_size; ++a)
        if ((h >> a) & 1u) inter &= P[a];
      if (F ? !contains_some(*F, inter) : inter == 0) {
        hyp = false;
        break;
      }
    }
    if (!hyp) continue;
    std::vector<mask_t> cl(A_size);
    for (int a = 0; a < A_size; ++a) cl[a] = X.closure(P[a]);
    bool ok = false;
    for (mask_t k : concl_sets) {
      mask_t c = full;
      for (int a = 0; k != 0; ++a, k >>= 1)
        if (k & 1u) c &= cl[a];
      if (c != 0) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

// B-indexed sequence conditions: entries drawn from pool; for every sequence
// some K in concl_sets has nonempty intersection of cl(union over a-section).
bool cond_B_seq(const Topology& X, int A_size, const SetFamily& B,
                const std::vector<mask_t>& pool, const std::vector<mask_t>& concl_sets,
                Budget& budget) {
  const std::vector<mask_t> asec = a_sections(A_size, B);
  Odometer od(B.size(), static_cast<int>(pool.size()));
  budget.charge(od.total());
  const mask_t full = X.full();
  for (; od.valid(); od.next()) {
    std::vector<mask_t> cl(A_size);
    for (int a = 0; a < A_size; ++a) {
      mask_t u = 0;
      mask_t s = asec[a];
      for (int j = 0; s != 0; ++j, s >>= 1)
        if (s & 1u) u |= pool[od.digits()[j]];
      cl[a] = X.closure(u);
    }
    bool ok = false;
    for (mask_t k : concl_sets) {
      mask_t c = full;
      for (int a = 0; k != 0; ++a, k >>= 1)
        if (k & 1u) c &= cl[a];
      if (c != 0) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

// Pointwise condition: every B-indexed sequence admits x such that every
// neighborhood of x meets, for every a, some entry indexed in a's section.
bool cond_pointwise(const Topology& X, int A_size, const SetFamily& B,
                    const std::vector<mask_t>& pool, Budget& budget) {
  const std::vector<mask_t> asec = a_sections(A_size, B);
  Odometer od(B.size(), static_cast<int>(pool.size()));
  budget.charge(od.total());
  for (; od.valid(); od.next()) {
    bool found = false;
    for (int x = 0; x < X.points && !found; ++x) {
      bool good = true;
      for (mask_t u : X.opens.sets) {
        if (!((u >> x) & 1u)) continue;
        for (int a = 0; a < A_size && good; ++a) {
          bool hit = false;
          mask_t s = asec[a];
          for (int j = 0; s != 0; ++j, s >>= 1)
            if ((s & 1u) && (pool[od.digits()[j]] & u)) {
              hit = true;
              break;
            }
          if (!hit) good = false;
        }
        if (!good) break;
      }
      found = good;
    }
    if (!found) return false;
  }
  return true;
}

// Open-avoidance condition: for every B-indexed sequence of qualifying opens,
// (int(intersection over a-section))_a is not a cover of X.
bool cond_open_avoid(const Topology& X, int A_size, const SetFamily& B,
                     const std::vector<mask_t>& pool, Budget& budget) {
  const std::vector<mask_t> asec = a_sections(A_size, B);
  Odometer od(B.size(), static_cast<int>(pool.size()));
  budget.charge(od.total());
  const mask_t full = X.full();
  for (; od.valid(); od.next()) {
    mask_t cover = 0;
    for (int a = 0; a < A_size; ++a) {
      mask_t q = full;
      mask_t s = asec[a];
      for (int j = 0; s != 0; ++j, s >>= 1)
        if (s & 1u) q &= pool[od.digits()[j]];
      cover |= X.interior(q);
    }
    if (cover == full) return false;
  }
  return true;
}

// All unions of at most k members of F (the empty union included).
std::vector<mask_t> unions_of_at_most(const SetFamily& F, int k) {
  std::set<mask_t> acc{0};
  std::set<mask_t> frontier{0};
  for (int step = 0; step < k; ++step) {
    std::set<mask_t> next;
    for (mask_t u : frontier)
      for (mask_t f : F.sets) next.insert(u | f);
    acc.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return {acc.begin(), acc.end()};
}

SetFamily closures_of(const Topology& X, const SetFamily& F) {
  std::vector<mask_t> s;
  s.reserve(F.sets.size());
  for (mask_t f : F.sets) s.push_back(X.closure(f));
  return SetFamily::of(F.ground, std::move(s));
}

// { Z over B's positions : union of the selected members covers K }, one
// family per K in G.
FamilyCollection section_cover_collection(const SetFamily& B, const SetFamily& G,
                                          Budget& budget) {
  int m = B.size();
  require_ground(m);
  budget.charge(checked_pow(2, m) * static_cast<std::uint64_t>(std::max(G.size(), 1)));
  std::vector<SetFamily> fams;
  for (mask_t k : G.sets) {
    std::vector<mask_t> members;
    for (mask_t z = 0;; ++z) {
      mask_t u = 0;
      for (int j = 0; j < m; ++j)
        if ((z >> j) & 1u) u |= B.sets[j];
      if ((u & k) == k) members.push_back(z);
      if (z == full_mask(m)) break;
    }
    fams.push_back(SetFamily::of(m, std::move(members)));
  }
  return FamilyCollection::of(m, std::move(fams));
}

void check_over_A(int A_size, const SetFamily& B, const char* what) {
  require_ground(A_size);
  if (B.ground != A_size)
    throw IndexOutOfGround(std::string(what) + " ground differs from A size");
}

}  // namespace

ConditionReport verify_theorem_e(const Topology& X, int A_size, const SetFamily& B,
                                 Budget& budget) {
  check_over_A(A_size, B, "B");
  require_ground(B.size());
  const int n = X.points;
  const std::vector<mask_t> whole{full_mask(A_size)};
  const std::vector<mask_t> all_subsets = [&] {
    std::vector<mask_t> v;
    for (mask_t m = 0;; ++m) {
      v.push_back(m);
      if (m == full_mask(n)) break;
    }
    return v;
  }();
  const std::vector<mask_t> asec = a_sections(A_size, B);

  ConditionReport r{.theorem_id = "e"};
  r.condition_values.emplace_back("1", check_BA_compact(X, A_size, B, budget).holds);

  r.condition_values.emplace_back(
      "2", cond_subset_seq(X, A_size, B,
                           std::vector<std::vector<mask_t>>(A_size, all_subsets), nullptr,
                           whole, budget));

  std::vector<std::vector<mask_t>> bounded_pools(A_size);
  for (int a = 0; a < A_size; ++a) {
    int kappa = std::popcount(asec[a]);
    for (mask_t m : all_subsets)
      if (std::popcount(m) <= kappa) bounded_pools[a].push_back(m);
  }
  r.condition_values.emplace_back(
      "3", cond_subset_seq(X, A_size, B, bounded_pools, nullptr, whole, budget));

  const std::vector<mask_t> points = singleton_masks(n);
  r.condition_values.emplace_back("4", cond_B_seq(X, A_size, B, points, whole, budget));
  r.condition_values.emplace_back("5", cond_pointwise(X, A_size, B, points, budget));

  const std::vector<mask_t> nonempty = nonempty_masks(n);
  r.condition_values.emplace_back("6", cond_B_seq(X, A_size, B, nonempty, whole, budget));

  std::vector<mask_t> nonempty_closed;
  for (mask_t m : nonempty)
    if (X.is_closed(m)) nonempty_closed.push_back(m);
  r.condition_values.emplace_back("7",
                                  cond_B_seq(X, A_size, B, nonempty_closed, whole, budget));

  std::vector<mask_t> proper_opens;
  for (mask_t o : X.opens.sets)
    if (o != X.full()) proper_opens.push_back(o);
  r.condition_values.emplace_back("8",
                                  cond_open_avoid(X, A_size, B, proper_opens, budget));
  r.finish();
  return r;
}

ConditionReport verify_theorem_r(const Topology& X, int I_size, const SetFamily& A,
                                 Budget& budget) {
  check_over_A(I_size, A, "A");
  const int p = A.size();
  require_ground(p);
  std::vector<mask_t> isec(I_size);
  for (int i = 0; i < I_size; ++i) isec[i] = section_positions(i, A).bits;

  ConditionReport r{.theorem_id = "r"};
  r.condition_values.emplace_back(
      "1", check_E_accumulation_property(X, I_size, transversal_dual(A), budget).holds);

  {
    Odometer od(p, X.opens.size());
    budget.charge(od.total());
    bool ok = true;
    for (; od.valid() && ok; od.next()) {
      std::vector<mask_t> O = materialize(od.digits(), X.opens.sets);
      if (union_over(O, full_mask(p)) != X.full()) continue;
      bool some = false;
      for (int i = 0; i < I_size; ++i)
        if (union_over(O, isec[i]) == X.full()) {
          some = true;
          break;
        }
      if (!some) ok = false;
    }
    r.condition_values.emplace_back("2", ok);
  }

  r.condition_values.emplace_back(
      "3", check_BA_compact(X, p, sections_family(I_size, A), budget).holds);

  {
    Odometer od(I_size, X.points);
    budget.charge(od.total());
    bool ok = true;
    for (; od.valid() && ok; od.next()) {
      mask_t c = X.full();
      for (mask_t a : A.sets) {
        mask_t s = 0;
        for (int i = 0; a != 0; ++i, a >>= 1)
          if (a & 1u) s |= mask_t{1} << od.digits()[i];
        c &= X.closure(s);
      }
      if (c == 0) ok = false;
    }
    r.condition_values.emplace_back("4", ok);
  }
  r.finish();
  return r;
}

ConditionReport verify_theorem_eO(const Topology& X, int A_size, const SetFamily& B,
                                  const SetFamily& F, Budget& budget) {
  check_over_A(A_size, B, "B");
  require_ground(B.size());
  if (F.ground != X.points) throw IndexOutOfGround("F ground differs from point count");
  const int n = X.points;
  const std::vector<mask_t> whole{full_mask(A_size)};
  const std::vector<mask_t> asec = a_sections(A_size, B);
  std::vector<mask_t> all_subsets;
  for (mask_t m = 0;; ++m) {
    all_subsets.push_back(m);
    if (m == full_mask(n)) break;
  }

  ConditionReport r{.theorem_id = "eO"};
  r.condition_values.emplace_back("1", check_F_BA_compact(X, A_size, B, F, budget).holds);
  r.condition_values.emplace_back(
      "1c", check_F_BA_compact(X, A_size, B, closures_of(X, F), budget).holds);

  r.condition_values.emplace_back(
      "2", cond_subset_seq(X, A_size, B,
                           std::vector<std::vector<mask_t>>(A_size, all_subsets), &F, whole,
                           budget));

  std::map<int, std::vector<mask_t>> union_pools;
  std::vector<std::vector<mask_t>> bounded(A_size);
  for (int a = 0; a < A_size; ++a) {
    int kappa = std::popcount(asec[a]);
    auto it = union_pools.find(kappa);
    if (it == union_pools.end())
      it = union_pools.emplace(kappa, unions_of_at_most(F, kappa)).first;
    bounded[a] = it->second;
  }
  r.condition_values.emplace_back("3",
                                  cond_subset_seq(X, A_size, B, bounded, &F, whole, budget));

  r.condition_values.emplace_back("4", cond_B_seq(X, A_size, B, F.sets, whole, budget));
  r.condition_values.emplace_back("5", cond_pointwise(X, A_size, B, F.sets, budget));

  std::vector<mask_t> large, large_closed, avoiding_opens;
  for (mask_t m : all_subsets)
    if (contains_some(F, m)) {
      large.push_back(m);
      if (X.is_closed(m)) large_closed.push_back(m);
    }
  for (mask_t o : X.opens.sets) {
    bool avoids = false;
    for (mask_t f : F.sets)
      if ((f & o) == 0) {
        avoids = true;
        break;
      }
    if (avoids) avoiding_opens.push_back(o);
  }
  r.condition_values.emplace_back("6", cond_B_seq(X, A_size, B, large, whole, budget));
  r.condition_values.emplace_back("7", cond_B_seq(X, A_size, B, large_closed, whole, budget));
  r.condition_values.emplace_back("8",
                                  cond_open_avoid(X, A_size, B, avoiding_opens, budget));

  r.condition_values.emplace_back(
      "9",
      check_F_E_accumulation(X, B.size(), cover_dual_family(A_size, B, budget), F, budget)
          .holds);
  r.finish();
  return r;
}

ConditionReport verify_theorem_rO(const Topology& X, int I_size, const SetFamily& A,
                                  const SetFamily& F, Budget& budget) {
  check_over_A(I_size, A, "A");
  if (F.ground != X.points) throw IndexOutOfGround("F ground differs from point count");
  const int p = A.size();
  require_ground(p);
  std::vector<mask_t> isec(I_size);
  for (int i = 0; i < I_size; ++i) isec[i] = section_positions(i, A).bits;
  const SetFamily E = transversal_dual(A);

  ConditionReport r{.theorem_id = "rO"};
  r.condition_values.emplace_back("1",
                                  check_F_E_accumulation(X, I_size, E, F, budget).holds);
  r.condition_values.emplace_back(
      "1c", check_F_E_accumulation(X, I_size, E, closures_of(X, F), budget).holds);

  {
    std::vector<mask_t> closed_sets;
    for (mask_t o : X.opens.sets) closed_sets.push_back(~o & X.full());
    Odometer od(p, static_cast<int>(closed_sets.size()));
    budget.charge(od.total());
    bool ok = true;
    for (; od.valid() && ok; od.next()) {
      std::vector<mask_t> C = materialize(od.digits(), closed_sets);
      bool hyp = true;
      for (int i = 0; i < I_size && hyp; ++i) {
        mask_t inter = X.full();
        mask_t s = isec[i];
        for (int j = 0; s != 0; ++j, s >>= 1)
          if (s & 1u) inter &= C[j];
        if (!contains_some(F, inter)) hyp = false;
      }
      if (!hyp) continue;
      mask_t c = X.full();
      for (int j = 0; j < p; ++j) c &= C[j];
      if (c == 0) ok = false;
    }
    r.condition_values.emplace_back("2", ok);
  }

  r.condition_values.emplace_back(
      "3", check_F_BA_compact(X, p, sections_family(I_size, A), F, budget).holds);

  {
    Odometer od(I_size, F.size());
    budget.charge(od.total());
    bool ok = true;
    for (; od.valid() && ok; od.next()) {
      std::vector<mask_t> Fs = materialize(od.digits(), F.sets);
      mask_t c = X.full();
      for (mask_t a : A.sets) {
        mask_t u = 0;
        for (int i = 0; a != 0; ++i, a >>= 1)
          if (a & 1u) u |= Fs[i];
        c &= X.closure(u);
      }
      if (c == 0) ok = false;
    }
    r.condition_values.emplace_back("4", ok);
  }
  r.finish();
  return r;
}

ConditionReport verify_theorem_eG(const Topology& X, int A_size, const SetFamily& B,
                                  const SetFamily& G, Budget& budget) {
  check_over_A(A_size, B, "B");
  check_over_A(A_size, G, "G");
  if (G.empty()) throw PreconditionViolated("G must be nonempty");
  require_ground(B.size());
  const int n = X.points;
  std::vector<mask_t> all_subsets;
  for (mask_t m = 0;; ++m) {
    all_subsets.push_back(m);
    if (m == full_mask(n)) break;
  }

  ConditionReport r{.theorem_id = "eG"};
  r.condition_values.emplace_back("1", check_BG_compact(X, A_size, B, G, budget).holds);
  r.condition_values.emplace_back(
      "2", cond_subset_seq(X, A_size, B,
                           std::vector<std::vector<mask_t>>(A_size, all_subsets), nullptr,
                           G.sets, budget));
  r.condition_values.emplace_back(
      "3", cond_B_seq(X, A_size, B, singleton_masks(n), G.sets, budget));
  r.condition_values.emplace_back(
      "4", cond_B_seq(X, A_size, B, nonempty_masks(n), G.sets, budget));
  r.condition_values.emplace_back(
      "5", check_calE_accumulation(X, B.size(), section_cover_collection(B, G, budget),
                                   std::nullopt, budget)
               .holds);
  r.finish();
  return r;
}

ConditionReport verify_theorem_eOG(const Topology& X, int A_size, const SetFamily& B,
                                   const SetFamily& G, const SetFamily& F, Budget& budget) {
  check_over_A(A_size, B, "B");
  check_over_A(A_size, G, "G");
  if (G.empty()) throw PreconditionViolated("G must be nonempty");
  require_ground(B.size());
  if (F.ground != X.points) throw IndexOutOfGround("F ground differs from point count");
  const int n = X.points;
  std::vector<mask_t> all_subsets;
  for (mask_t m = 0;; ++m) {
    all_subsets.push_back(m);
    if (m == full_mask(n)) break;
  }
  std::vector<mask_t> large;
  for (mask_t m : all_subsets)
    if (contains_some(F, m)) large.push_back(m);

  ConditionReport r{.theorem_id = "eOG"};
  r.condition_values.emplace_back("1",
                                  check_F_BG_compact(X, A_size, B, G, F, budget).holds);
  r.condition_values.emplace_back(
      "2", cond_subset_seq(X, A_size, B,
                           std::vector<std::vector<mask_t>>(A_size, all_subsets), &F,
                           G.sets, budget));
  r.condition_values.emplace_back("3", cond_B_seq(X, A_size, B, F.sets, G.sets, budget));
  r.condition_values.emplace_back("4", cond_B_seq(X, A_size, B, large, G.sets, budget));
  r.condition_values.emplace_back(
      "5", check_calE_accumulation(X, B.size(), section_cover_collection(B, G, budget), F,
                                   budget)
               .holds);
  r.finish();
  return r;
}

namespace {

struct CollectionSetup {
  FamilyCollection calE;
  SetFamily A;       // union of the duals
  SetFamily B;       // point sections of A
  SetFamily G_pos;   // each K as a mask over A's positions
};

CollectionSetup collection_setup(int I_size, const FamilyCollection& Gcal) {
  require_ground(I_size);
  if (Gcal.ground != I_size)
    throw IndexOutOfGround("collection ground differs from index size");
  if (Gcal.size() == 0) throw PreconditionViolated("the collection must be nonempty");
  std::vector<SetFamily> duals;
  for (const SetFamily& K : Gcal.families) duals.push_back(transversal_dual(K));
  CollectionSetup s;
  s.calE = FamilyCollection::of(I_size, duals);
  s.A = union_of(s.calE);
  for (const SetFamily& K : Gcal.families)
    for (mask_t k : K.sets)
      if (!s.A.contains(k))
        throw PreconditionViolated("every family in the collection must sit inside "
                                   "the union of the transversal duals");
  require_ground(s.A.size());
  s.B = sections_family(I_size, s.A);
  std::vector<mask_t> gmasks;
  for (const SetFamily& K : Gcal.families) {
    mask_t g = 0;
    for (mask_t k : K.sets) g |= mask_t{1} << *s.A.position(k);
    gmasks.push_back(g);
  }
  s.G_pos = SetFamily::of(s.A.size(), std::move(gmasks));
  return s;
}

}  // namespace

ConditionReport verify_theorem_rEE(const Topology& X, int I_size,
                                   const FamilyCollection& Gcal, Budget& budget) {
  CollectionSetup s = collection_setup(I_size, Gcal);
  const int p = s.A.size();
  std::vector<mask_t> isec(I_size);
  for (int i = 0; i < I_size; ++i) isec[i] = section_positions(i, s.A).bits;

  ConditionReport r{.theorem_id = "rEE"};
  r.condition_values.emplace_back(
      "1", check_calE_accumulation(X, I_size, s.calE, std::nullopt, budget).holds);

  {
    Odometer od(p, X.opens.size());
    budget.charge(od.total());
    bool ok = true;
    for (; od.valid() && ok; od.next()) {
      std::vector<mask_t> O = materialize(od.digits(), X.opens.sets);
      bool constrained = true;
      for (mask_t g : s.G_pos.sets)
        if (union_over(O, g) != X.full()) {
          constrained = false;
          break;
        }
      if (!constrained) continue;
      bool some = false;
      for (int i = 0; i < I_size; ++i)
        if (union_over(O, isec[i]) == X.full()) {
          some = true;
          break;
        }
      if (!some) ok = false;
    }
    r.condition_values.emplace_back("2", ok);
  }

  r.condition_values.emplace_back(
      "3", check_BG_compact(X, p, s.B, s.G_pos, budget).holds);

  {
    Odometer od(I_size, X.points);
    budget.charge(od.total());
    bool ok = true;
    for (; od.valid() && ok; od.next()) {
      bool some = false;
      for (const SetFamily& K : Gcal.families) {
        mask_t c = X.full();
        for (mask_t a : K.sets) {
          mask_t set = 0;
          for (int i = 0; a != 0; ++i, a >>= 1)
            if (a & 1u) set |= mask_t{1} << od.digits()[i];
          c &= X.closure(set);
        }
        if (c != 0) {
          some = true;
          break;
        }
      }
      if (!some) ok = false;
    }
    r.condition_values.emplace_back("4", ok);
  }
  r.finish();
  return r;
}

ConditionReport verify_theorem_rEEf(const Topology& X, int I_size,
                                    const FamilyCollection& Gcal, const SetFamily& F,
                                    Budget& budget) {
  if (F.ground != X.points) throw IndexOutOfGround("F ground differs from point count");
  CollectionSetup s = collection_setup(I_size, Gcal);

  ConditionReport r{.theorem_id = "rEEf"};
  r.condition_values.emplace_back(
      "1", check_calE_accumulation(X, I_size, s.calE, F, budget).holds);
  r.condition_values.emplace_back(
      "2", check_F_BG_compact(X, s.A.size(), s.B, s.G_pos, F, budget).holds);

  {
    Odometer od(I_size, F.size());
    budget.charge(od.total());
    bool ok = true;
    for (; od.valid() && ok; od.next()) {
      std::vector<mask_t> Fs = materialize(od.digits(), F.sets);
      bool some = false;
      for (const SetFamily& K : Gcal.families) {
        mask_t c = X.full();
        for (mask_t a : K.sets) {
          mask_t u = 0;
          for (int i = 0; a != 0; ++i, a >>= 1)
            if (a & 1u) u |= Fs[i];
          c &= X.closure(u);
        }
        if (c != 0) {
          some = true;
          break;
        }
      }
      if (!some) ok = false;
    }
    r.condition_values.emplace_back("3", ok);
  }
  r.finish();
  return r;
}

ConditionReport verify_prop_ae(const Topology& X, int I_size, const SetFamily& A,
                               const PointSequence& seq, int x) {
  check_over_A(I_size, A, "A");
  if (seq.index_size != I_size) throw IndexOutOfGround("sequence index differs from I size");
  ConditionReport r{.theorem_id = "ae"};
  r.condition_values.emplace_back(
      "1", is_E_accumulation_point(X, seq, x, transversal_dual(A)));
  bool all = true;
  for (mask_t a : A.sets) {
    mask_t s = 0;
    for (int i = 0; a != 0; ++i, a >>= 1)
      if (a & 1u) s |= mask_t{1} << seq.values[i];
    if (!((X.closure(s) >> x) & 1u)) {
      all = false;
      break;
    }
  }
  r.condition_values.emplace_back("2", all);
  r.finish();
  return r;
}

ConditionReport verify_prop_aeO(const Topology& X, int I_size, const SetFamily& A,
                                const SubsetSequence& setseq, int x) {
  check_over_A(I_size, A, "A");
  if (setseq.index_size != I_size)
    throw IndexOutOfGround("sequence index differs from I size");
  ConditionReport r{.theorem_id = "aeO"};
  r.condition_values.emplace_back("1", is_E_limit_point(X, setseq, x, transversal_dual(A)));
  bool all = true;
  for (mask_t a : A.sets) {
    mask_t u = 0;
    for (int i = 0; a != 0; ++i, a >>= 1)
      if (a & 1u) u |= setseq.values[i];
    if (!((X.closure(u) >> x) & 1u)) {
      all = false;
      break;
    }
  }
  r.condition_values.emplace_back("2", all);
  r.finish();
  return r;
}

ConditionReport verify_facts(const Topology& X, int A_size, const SetFamily& B,
                             Budget& budget) {
  check_over_A(A_size, B, "B");
  const SetFamily pow = powerset(A_size);
  const int P = pow.size();
  require_ground(P);
  const mask_t fullP = full_mask(P);

  mask_t bmask = 0;
  for (mask_t h : B.sets) bmask |= mask_t{1} << *pow.position(h);

  std::map<mask_t, bool> memo;
  auto from_selection = [&](mask_t sel) {
    std::vector<mask_t> s;
    for (int j = 0; j < P; ++j)
      if ((sel >> j) & 1u) s.push_back(pow.sets[j]);
    return SetFamily::of(A_size, std::move(s));
  };
  auto v = [&](mask_t sel) {
    auto it = memo.find(sel);
    if (it != memo.end()) return it->second;
    bool val = check_BA_compact(X, A_size, from_selection(sel), budget).holds;
    memo.emplace(sel, val);
    return val;
  };

  const bool vB = v(bmask);
  ConditionReport r{.theorem_id = "facts"};
  r.condition_values.emplace_back("expected", true);

  r.condition_values.emplace_back("full-member",
                                  !B.contains(full_mask(A_size)) || vB);

  {
    bool ok = true;
    if (vB) {
      for (mask_t s = bmask;; s = (s + 1) | bmask) {
        if (!v(s)) {
          ok = false;
          break;
        }
        if (s == fullP) break;
      }
    }
    r.condition_values.emplace_back("superset-monotone", ok);
  }

  {
    bool ok = true;
    if (vB) {
      budget.charge(checked_pow(2, P));
      for (mask_t s = 0;; ++s) {
        SetFamily B2 = from_selection(s);
        bool dominates = true;
        for (mask_t h : B.sets) {
          bool has_super = false;
          for (mask_t h2 : B2.sets)
            if ((h & ~h2) == 0) {
              has_super = true;
              break;
            }
          if (!has_super) {
            dominates = false;
            break;
          }
        }
        if (dominates && !v(s)) {
          ok = false;
          break;
        }
        if (s == fullP) break;
      }
    }
    r.condition_values.emplace_back("domination-monotone", ok);
  }

  auto compress = [&](mask_t h, mask_t amask) {
    mask_t out = 0;
    int bit = 0;
    for (int a = 0; a < A_size; ++a) {
      if (!((amask >> a) & 1u)) continue;
      if ((h >> a) & 1u) out |= mask_t{1} << bit;
      ++bit;
    }
    return out;
  };

  {
    bool ok = true;
    if (vB) {
      for (mask_t amask = 0;; ++amask) {
        std::vector<mask_t> restricted;
        for (mask_t h : B.sets) restricted.push_back(compress(h & amask, amask));
        int sz = std::popcount(amask);
        if (!check_BA_compact(X, sz, SetFamily::of(sz, std::move(restricted)), budget)
                 .holds) {
          ok = false;
          break;
        }
        if (amask == full_mask(A_size)) break;
      }
    }
    r.condition_values.emplace_back("index-restriction", ok);
  }

  {
    bool ok = true;
    if (vB) {
      // Per H: all subfamilies of P(H); premise table computed once each.
      std::vector<std::vector<bool>> hyp_ok(B.size());
      std::vector<std::vector<std::vector<mask_t>>> pieces(B.size());
      std::vector<int> radii;
      for (int j = 0; j < B.size(); ++j) {
        mask_t h = B.sets[j];
        int hs = std::popcount(h);
        std::vector<mask_t> subs;  // subsets of h, as subsets of A
        for (mask_t m = h;; m = (m - 1) & h) {
          subs.push_back(m);
          if (m == 0) break;
        }
        int cnt = 1 << subs.size();
        radii.push_back(cnt);
        for (mask_t sel = 0; sel < static_cast<mask_t>(cnt); ++sel) {
          std::vector<mask_t> fam_A, fam_h;
          for (std::size_t t = 0; t < subs.size(); ++t)
            if ((sel >> t) & 1u) {
              fam_A.push_back(subs[t]);
              fam_h.push_back(compress(subs[t], h));
            }
          pieces[j].push_back(fam_A);
          hyp_ok[j].push_back(
              check_BA_compact(X, hs, SetFamily::of(hs, std::move(fam_h)), budget).holds);
        }
      }
      Odometer od(radii);
      budget.charge(od.total());
      for (; od.valid() && ok; od.next()) {
        bool premise = true;
        for (int j = 0; j < B.size(); ++j)
          if (!hyp_ok[j][od.digits()[j]]) {
            premise = false;
            break;
          }
        if (!premise) continue;
        mask_t sel = 0;
        for (int j = 0; j < B.size(); ++j)
          for (mask_t m : pieces[j][od.digits()[j]]) sel |= mask_t{1} << *pow.position(m);
        if (!v(sel)) ok = false;
      }
    }
    r.condition_values.emplace_back("piecewise-union", ok);
  }

  {
    bool ok = true;
    if (vB) {
      for (int C_size = A_size; C_size <= std::min(A_size + 1, kGroundLimit) && ok;
           ++C_size) {
        Odometer od(C_size, A_size);
        budget.charge(od.total());
        for (; od.valid() && ok; od.next()) {
          mask_t hit = 0;
          for (int c = 0; c < C_size; ++c) hit |= mask_t{1} << od.digits()[c];
          if (hit != full_mask(A_size)) continue;
          std::vector<mask_t> pulled;
          for (mask_t h : B.sets) {
            mask_t ph = 0;
            for (int c = 0; c < C_size; ++c)
              if ((h >> od.digits()[c]) & 1u) ph |= mask_t{1} << c;
            pulled.push_back(ph);
          }
          if (!check_BA_compact(X, C_size, SetFamily::of(C_size, std::move(pulled)), budget)
                   .holds)
            ok = false;
        }
      }
    }
    r.condition_values.emplace_back("surjection-pullback", ok);
  }

  r.condition_values.emplace_back(
      "downward-closure-invariant",
      vB == check_BA_compact(X, A_size, downward_closure(B), budget).holds);
  r.finish();
  return r;
}

namespace {

Topology random_topology_rng(int n, Rng& rng) {
  int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 2));
  std::vector<mask_t> sub;
  for (int i = 0; i < k; ++i)
    sub.push_back(static_cast<mask_t>(rng.next()) & full_mask(n));
  return topology_from_subbase(n, SetFamily::of(n, std::move(sub)));
}

SetFamily random_family_rng(int ground, int max_members, Rng& rng) {
  int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_members) + 1));
  std::vector<mask_t> sets;
  for (int i = 0; i < k; ++i)
    sets.push_back(static_cast<mask_t>(rng.next()) & full_mask(ground));
  return SetFamily::of(ground, std::move(sets));
}

}  // namespace

Topology random_topology(int n, std::uint64_t seed) {
  require_ground(n);
  Rng rng(seed);
  return random_topology_rng(n, rng);
}

SetFamily random_family(int ground, int max_members, std::uint64_t seed) {
  require_ground(ground);
  Rng rng(seed);
  return random_family_rng(ground, max_members, rng);
}

FamilyCollection random_collection(int ground, int max_families, int max_members,
                                   std::uint64_t seed) {
  require_ground(ground);
  Rng rng(seed);
  int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_families) + 1));
  std::vector<SetFamily> fams;
  for (int i = 0; i < k; ++i) fams.push_back(random_family_rng(ground, max_members, rng));
  return FamilyCollection::of(ground, std::move(fams));
}

FuzzResult fuzz_theorems(std::uint64_t seed, std::uint64_t count, int max_points,
                         Budget& budget) {
  if (max_points < 1 || max_points > kGroundLimit)
    throw IndexOutOfGround("max points out of range");
  FuzzResult res;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t s = seed + k;
    Rng rng(s);
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_points)));
    Topology X = random_topology_rng(n, rng);
    int A_size = 1 + static_cast<int>(rng.below(2));
    SetFamily B = random_family_rng(A_size, 4, rng);
    SetFamily F = random_family_rng(n, 3, rng);
    SetFamily G = random_family_rng(A_size, 3, rng);
    // Members of each random constraint family share a point, so the family
    // sits inside its own transversal dual and the collection verifiers apply.
    int fam_count = 1 + static_cast<int>(rng.below(2));
    std::vector<SetFamily> kfams;
    for (int t = 0; t < fam_count; ++t) {
      mask_t common = mask_t{1} << rng.below(static_cast<std::uint64_t>(A_size));
      int members = 1 + static_cast<int>(rng.below(3));
      std::vector<mask_t> sets;
      for (int q = 0; q < members; ++q)
        sets.push_back((static_cast<mask_t>(rng.next()) & full_mask(A_size)) | common);
      kfams.push_back(SetFamily::of(A_size, std::move(sets)));
    }
    FamilyCollection Gcal = FamilyCollection::of(A_size, std::move(kfams));

    res.checked = k + 1;
    auto record = [&](const ConditionReport& r) {
      if (r.agree) return true;
      res.all_agree = false;
      res.bad_seed = s;
      res.theorem_id = r.theorem_id;
      res.X = X;
      res.A_size = A_size;
      res.B = B;
      res.F = F;
      res.G = G;
      res.Gcal = Gcal;
      return false;
    };
    if (!record(verify_theorem_e(X, A_size, B, budget))) return res;
    if (!record(verify_theorem_r(X, A_size, B, budget))) return res;
    if (!record(verify_theorem_eO(X, A_size, B, F, budget))) return res;
    if (!record(verify_theorem_rO(X, A_size, B, F, budget))) return res;
    if (!G.empty()) {
      if (!record(verify_theorem_eG(X, A_size, B, G, budget))) return res;
      if (!record(verify_theorem_eOG(X, A_size, B, G, F, budget))) return res;
    }
    if (!record(verify_theorem_rEE(X, A_size, Gcal, budget))) return res;
    if (!record(verify_theorem_rEEf(X, A_size, Gcal, F, budget))) return res;
    if (!record(verify_facts(X, A_size, B, budget))) return res;
  }
  return res;
}

std::vector<std::string> known_claims() {
  return {"ba-subset-monotone", "ba-superset-implies-subset", "bg-implies-ba",
          "weak-implies-quasi", "quasi-implies-weak"};
}

std::optional<ClaimInstance> find_counterexample(const std::string& claim,
                                                 std::uint64_t seed_count, int max_points,
                                                 Budget& budget) {
  auto claims = known_claims();
  if (std::find(claims.begin(), claims.end(), claim) == claims.end())
    throw ParseError("unknown claim: " + claim);
  if (max_points < 1 || max_points > kGroundLimit)
    throw IndexOutOfGround("max points out of range");
  for (std::uint64_t s = 0; s < seed_count; ++s) {
    budget.charge(1);
    Rng rng(s);
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_points)));
    Topology X = random_topology_rng(n, rng);
    if (claim == "weak-implies-quasi" || claim == "quasi-implies-weak") {
      int I_size = 1 + static_cast<int>(rng.below(3));
      int cnt = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(I_size)));
      std::vector<SetFamily> fams;
      for (int t = 0; t < cnt; ++t)
        fams.push_back(
            principal_ultrafilter(static_cast<int>(rng.below(I_size)), I_size));
      FamilyCollection M = FamilyCollection::of(I_size, std::move(fams));
      bool weak = check_weak_M_compact(X, M, budget).holds;
      bool quasi = check_quasi_M_compact(X, M, budget).holds;
      bool premise = claim == "weak-implies-quasi" ? weak : quasi;
      bool concl = claim == "weak-implies-quasi" ? quasi : weak;
      if (premise && !concl)
        return ClaimInstance{.claim = claim, .seed = s, .X = X, .A_size = I_size, .M = M};
      continue;
    }
    int A_size = 1 + static_cast<int>(rng.below(3));
    SetFamily B = random_family_rng(A_size, 3, rng);
    if (claim == "bg-implies-ba") {
      SetFamily G = random_family_rng(A_size, 3, rng);
      if (G.empty()) continue;
      bool bg = check_BG_compact(X, A_size, B, G, budget).holds;
      bool ba = check_BA_compact(X, A_size, B, budget).holds;
      if (bg && !ba)
        return ClaimInstance{
            .claim = claim, .seed = s, .X = X, .A_size = A_size, .B = B, .B2 = G};
      continue;
    }
    SetFamily extra = random_family_rng(A_size, 3, rng);
    std::vector<mask_t> merged = B.sets;
    merged.insert(merged.end(), extra.sets.begin(), extra.sets.end());
    SetFamily B2 = SetFamily::of(A_size, std::move(merged));
    bool small = check_BA_compact(X, A_size, B, budget).holds;
    bool big = check_BA_compact(X, A_size, B2, budget).holds;
    bool premise = claim == "ba-subset-monotone" ? small : big;
    bool concl = claim == "ba-subset-monotone" ? big : small;
    if (premise && !concl)
      return ClaimInstance{
          .claim = claim, .seed = s, .X = X, .A_size = A_size, .B = B, .B2 = B2};
  }
  return std::nullopt;
}

}  // namespace covlab
