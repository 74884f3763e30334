#pragma once

#include "vclines/bits.hpp"

#include <vector>

namespace vclines {

// A finite set system: ground set [0, ground) and a deduplicated family of
// subsets (the empty set is allowed and meaningful).
struct FiniteSetSystem {
  int ground = 0;
  std::vector<Mask> family;
};

FiniteSetSystem make_system(int ground, std::vector<Mask> family);

// Unions of up to k members (repetition makes "exactly k" and "at most k"
// coincide). k >= 1.
FiniteSetSystem k_fold_union(const FiniteSetSystem& sys, int k);

bool system_shatters(const FiniteSetSystem& sys, Mask y);

// Largest size of a shattered subset; 0 for the empty family. limit <= 0
// means the default ground-size guard (12, overridable via
// VCLINES_MAX_GROUND).
int vc_dim(const FiniteSetSystem& sys, int limit = 0);

bool intersection_closed(const FiniteSetSystem& sys);

// Smallest member containing y. Throws when the family is not
// intersection-closed or no member contains y.
Mask s_hull(const FiniteSetSystem& sys, Mask y);

// Number of non-isomorphic structures (Y, traces of sys on Y) over subsets Y
// of maximum size shattered by the k-fold union of sys.
int s_k_count(const FiniteSetSystem& sys, int k, int limit = 0);

// Traces of real open intervals on a chain of m elements: the empty set and
// every contiguous run.
FiniteSetSystem intervals_system(int m);

}  // namespace vclines
