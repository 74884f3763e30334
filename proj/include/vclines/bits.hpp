#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace vclines {

// Point index sets are bitmasks; configs are capped well below 32 points.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (Mask(~Mask{0}) >> (32 - n)); }

inline std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(lowest_bit(m));
  return out;
}

inline Mask indices_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

// Lexicographic order on subsets viewed as sorted index lists
// ({0,1} < {0,1,2} < {0,2} < {1}).
inline bool subset_lex_less(Mask a, Mask b) {
  while (a && b) {
    int ia = lowest_bit(a), ib = lowest_bit(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return b != 0;
}

// Re-indexes `m` (a subset of `within`) to the compressed coordinates of
// `within`'s elements, numbered in increasing order.
inline Mask compress_mask(Mask m, Mask within) {
  Mask out = 0;
  int pos = 0;
  for (; within; within &= within - 1, ++pos)
    if (m & bit(lowest_bit(within))) out |= bit(pos);
  return out;
}

}  // namespace vclines
