#include "covlab/fintop.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace covlab {

namespace {

std::string mask_str(mask_t m, int ground) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < ground; ++i)
    if ((m >> i) & 1u) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

}  // namespace

Topology::Topology(int points_, SetFamily opens_) : points(points_), opens(std::move(opens_)) {
  require_ground(points);
  if (opens.ground != points) throw ValidationError("opens ground differs from point count");
  if (!opens.contains(0)) throw ValidationError("missing open set {}");
  if (!opens.contains(full()))
    throw ValidationError("missing open set " + mask_str(full(), points));
  for (mask_t a : opens.sets)
    for (mask_t b : opens.sets) {
      if (!opens.contains(a & b))
        throw ValidationError("opens not closed under intersection: missing " +
                              mask_str(a & b, points));
      if (!opens.contains(a | b))
        throw ValidationError("opens not closed under union: missing " +
                              mask_str(a | b, points));
    }
}

mask_t Topology::interior(mask_t s) const {
  mask_t out = 0;
  for (mask_t o : opens.sets)
    if ((o & ~s) == 0) out |= o;
  return out;
}

mask_t Topology::closure(mask_t s) const {
  return ~interior(~s & full()) & full();
}

DirectedSet::DirectedSet(int size_, std::vector<std::vector<bool>> leq_)
    : size(size_), leq(std::move(leq_)) {
  require_ground(size);
  if (static_cast<int>(leq.size()) != size)
    throw ValidationError("directed set relation size mismatch");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != size)
      throw ValidationError("directed set relation size mismatch");
  for (int i = 0; i < size; ++i)
    if (!leq[i][i]) throw ValidationError("directed set relation not reflexive");
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      for (int k = 0; k < size; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          throw ValidationError("directed set relation not transitive");
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      bool bounded = false;
      for (int k = 0; k < size; ++k)
        if (leq[i][k] && leq[j][k]) bounded = true;
      if (!bounded) throw ValidationError("directed set has an unbounded pair");
    }
}

DirectedSet DirectedSet::chain(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i][j] = true;
  return DirectedSet(n, std::move(leq));
}

Topology topology_from_subbase(int n, const SetFamily& subbase) {
  require_ground(n);
  if (subbase.ground != n) throw IndexOutOfGround("subbase ground mismatch");
  std::set<mask_t> fam(subbase.sets.begin(), subbase.sets.end());
  fam.insert(0);
  fam.insert(full_mask(n));  // the empty intersection of subbase members
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<mask_t> cur(fam.begin(), fam.end());
    for (mask_t a : cur)
      for (mask_t b : cur) {
        if (fam.insert(a & b).second) grew = true;
        if (fam.insert(a | b).second) grew = true;
      }
  }
  return Topology(n, SetFamily::of(n, std::vector<mask_t>(fam.begin(), fam.end())));
}

Topology discrete(int n) { return Topology(n, powerset(n)); }

Topology indiscrete(int n) {
  return Topology(n, SetFamily::of(n, {0, full_mask(n)}));
}

Topology sierpinski() { return Topology(2, SetFamily::of(2, {0, 1, 3})); }

bool is_T0(const Topology& X) {
  for (int x = 0; x < X.points; ++x)
    for (int y = x + 1; y < X.points; ++y) {
      bool separated = false;
      for (mask_t o : X.opens.sets)
        if (((o >> x) & 1u) != ((o >> y) & 1u)) separated = true;
      if (!separated) return false;
    }
  return true;
}

bool is_T1(const Topology& X) {
  for (int x = 0; x < X.points; ++x)
    if (X.closure(mask_t{1} << x) != (mask_t{1} << x)) return false;
  return true;
}

bool restricted_cluster_point(const Topology& X, const DirectedSet& Sigma,
                              const PointSequence& seq, const Subset& T, int x) {
  if (seq.index_size != Sigma.size || T.ground != Sigma.size)
    throw IndexOutOfGround("net index mismatch");
  if (x < 0 || x >= X.points) throw IndexOutOfGround("point out of space");
  for (int v : seq.values)
    if (v < 0 || v >= X.points) throw IndexOutOfGround("net value out of space");
  for (int tau = 0; tau < Sigma.size; ++tau) {
    if (!T.contains(tau)) continue;
    for (mask_t u : X.opens.sets) {
      if (!((u >> x) & 1u)) continue;
      bool met = false;
      for (int sigma = 0; sigma < Sigma.size; ++sigma)
        if (Sigma.leq[tau][sigma] && ((u >> seq.values[sigma]) & 1u)) met = true;
      if (!met) return false;
    }
  }
  return true;
}

SetFamily minimal_accumulation_family(const PointSequence& seq, int x, const Topology& X) {
  if (x < 0 || x >= X.points) throw IndexOutOfGround("point out of space");
  for (int v : seq.values)
    if (v < 0 || v >= X.points) throw IndexOutOfGround("sequence value out of space");
  std::vector<mask_t> out;
  for (mask_t u : X.opens.sets) {
    if (!((u >> x) & 1u)) continue;
    mask_t idx = 0;
    for (int i = 0; i < seq.index_size; ++i)
      if ((u >> seq.values[i]) & 1u) idx |= mask_t{1} << i;
    out.push_back(idx);
  }
  return SetFamily::of(seq.index_size, std::move(out));
}

std::vector<Topology> all_topologies(int n) {
  require_ground(n);
  std::vector<Topology> out;
  const SetFamily ps = powerset(n);
  const int m = ps.size();
  if (m > 20) throw GroundTooLarge("too many subsets to enumerate topologies");
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << m); ++pick) {
    std::vector<mask_t> fam;
    for (int j = 0; j < m; ++j)
      if ((pick >> j) & 1u) fam.push_back(ps.sets[j]);
    SetFamily f = SetFamily::of(n, std::move(fam));
    if (!f.contains(0) || !f.contains(full_mask(n))) continue;
    bool ok = true;
    for (mask_t a : f.sets) {
      for (mask_t b : f.sets)
        if (!f.contains(a & b) || !f.contains(a | b)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) out.emplace_back(n, std::move(f));
  }
  return out;
}

std::vector<Topology> topologies_up_to_homeo(int n) {
  std::vector<Topology> all = all_topologies(n);
  std::set<std::vector<mask_t>> seen;
  std::vector<Topology> out;
  std::vector<int> perm(n);
  for (const Topology& X : all) {
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<mask_t> best;
    do {
      std::vector<mask_t> img;
      img.reserve(X.opens.sets.size());
      for (mask_t o : X.opens.sets) {
        mask_t p = 0;
        for (int i = 0; i < n; ++i)
          if ((o >> i) & 1u) p |= mask_t{1} << perm[i];
        img.push_back(p);
      }
      std::sort(img.begin(), img.end(), mask_less);
      if (best.empty() || std::lexicographical_compare(img.begin(), img.end(), best.begin(),
                                                       best.end()))
        best = std::move(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty()) best = X.opens.sets;  // n == 0
    if (seen.insert(best).second) out.push_back(X);
  }
  return out;
}

}  // namespace covlab
