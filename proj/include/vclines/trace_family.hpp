#pragma once

#include "vclines/bits.hpp"

#include <optional>
#include <vector>

namespace vclines {

// The combinatorial quotient of a config: a ground set [0, n) plus the traces
// of size >= 2 cut out by the covering family (lines, hyperplanes, ...).
// Every point additionally has an implicit singleton class (a line meeting
// the set in exactly that point always exists), and empty traces are free, so
// isolation questions depend only on this data.
//
// Class codes: c >= 0 indexes classes(); c < 0 encodes the singleton {-c-1}.
class TraceFamily {
 public:
  TraceFamily(int n, std::vector<Mask> classes);

  int ground_size() const { return n_; }
  const std::vector<Mask>& classes() const { return classes_; }
  const std::vector<int>& classes_through(int p) const { return through_.at(p); }

  static int singleton_code(int p) { return -p - 1; }
  static bool is_singleton(int code) { return code < 0; }
  static int singleton_point(int code) { return -code - 1; }
  Mask code_trace(int code) const;

  // Can `target` be written as a union of at most k classes (each contained
  // in target) plus singletons?
  bool isolable(Mask target, int k) const;

  // Minimum-cardinality cover of `target` by class codes, lexicographically
  // least in canonical candidate order among the minimum-size ones.
  // nullopt if more than max_classes classes are needed.
  std::optional<std::vector<int>> isolation_cover(Mask target, int max_classes) const;

  // First subset (in lexicographic order as sorted index lists) that is not
  // isolable with k classes; nullopt when every subset is isolable.
  std::optional<Mask> first_unisolable(int k) const;

  bool shatters(int k) const { return !first_unisolable(k).has_value(); }

  // Minimum number of classes (lines or singletons) covering the ground set.
  int min_cover_size() const;

 private:
  bool cover_rec(Mask remaining, int k, Mask target) const;

  int n_;
  std::vector<Mask> classes_;
  std::vector<std::vector<int>> through_;
};

}  // namespace vclines
