#pragma once

#include <vector>

#include "covlab/setfam.hpp"

namespace covlab {

// A finite topological space: the open-set family is stored in full and
// validated (empty set, full set, pairwise unions and intersections).
struct Topology {
  int points = 0;
  SetFamily opens;

  Topology() : opens(0) { opens.sets = {0}; }
  Topology(int points_, SetFamily opens_);

  mask_t full() const { return full_mask(points); }
  bool is_open(mask_t s) const { return opens.contains(s); }
  bool is_closed(mask_t s) const { return opens.contains(~s & full()); }

  mask_t interior(mask_t s) const;
  mask_t closure(mask_t s) const;

  friend bool operator==(const Topology&, const Topology&) = default;
};

struct PointSequence {
  int index_size = 0;
  std::vector<int> values;  // length index_size

  PointSequence() = default;
  PointSequence(int index_size_, std::vector<int> values_)
      : index_size(index_size_), values(std::move(values_)) {
    if (static_cast<int>(values.size()) != index_size)
      throw IndexOutOfGround("point sequence length mismatch");
  }

  friend bool operator==(const PointSequence&, const PointSequence&) = default;
};

struct SubsetSequence {
  int index_size = 0;
  int subset_ground = 0;
  std::vector<mask_t> values;  // length index_size, masks over subset_ground

  SubsetSequence() = default;
  SubsetSequence(int index_size_, int subset_ground_, std::vector<mask_t> values_)
      : index_size(index_size_), subset_ground(subset_ground_), values(std::move(values_)) {
    if (static_cast<int>(values.size()) != index_size)
      throw IndexOutOfGround("subset sequence length mismatch");
    for (mask_t m : values)
      if (m & ~full_mask(subset_ground)) throw IndexOutOfGround("subset out of ground");
  }

  friend bool operator==(const SubsetSequence&, const SubsetSequence&) = default;
};

// A finite directed set: reflexive, transitive, every pair has an upper bound.
struct DirectedSet {
  int size = 0;
  std::vector<std::vector<bool>> leq;  // leq[i][j] means i <= j

  DirectedSet() = default;
  DirectedSet(int size_, std::vector<std::vector<bool>> leq_);

  // Total order 0 <= 1 <= ... <= n-1.
  static DirectedSet chain(int n);
};

Topology topology_from_subbase(int n, const SetFamily& subbase);

Topology discrete(int n);
Topology indiscrete(int n);
Topology sierpinski();  // opens {}, {0}, {0,1}

bool is_T0(const Topology& X);
bool is_T1(const Topology& X);

// Def of a cluster point restricted to T: for every tau in T and every open
// U containing x, some sigma >= tau has seq(sigma) in U.
bool restricted_cluster_point(const Topology& X, const DirectedSet& Sigma,
                              const PointSequence& seq, const Subset& T, int x);

// The smallest E such that x is an E-accumulation point of seq:
// { {i : seq(i) in U} : U open, x in U }.
SetFamily minimal_accumulation_family(const PointSequence& seq, int x, const Topology& X);

// All labeled topologies on n points.
std::vector<Topology> all_topologies(int n);
// One representative per homeomorphism class.
std::vector<Topology> topologies_up_to_homeo(int n);

}  // namespace covlab
